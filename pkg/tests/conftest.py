import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from raaglie.graph import CommutationGraph, parse_graph  # noqa: E402

DATA = Path(__file__).parent / "data"


def make_mini():
    return parse_graph((DATA / "mini.json").read_text())


def make_graphs():
    return {
        "edgeless2": CommutationGraph.edgeless(2),
        "edgeless3": CommutationGraph.edgeless(3),
        "mini": make_mini(),
        "K3": CommutationGraph.complete(3),
    }


GRAPHS = make_graphs()


@pytest.fixture
def mini():
    return GRAPHS["mini"]


@pytest.fixture
def edgeless2():
    return GRAPHS["edgeless2"]


@pytest.fixture
def edgeless3():
    return GRAPHS["edgeless3"]


@pytest.fixture
def k3():
    return GRAPHS["K3"]


@pytest.fixture(params=sorted(GRAPHS))
def graph(request):
    return GRAPHS[request.param]


@pytest.fixture
def mini_path():
    return str(DATA / "mini.json")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
