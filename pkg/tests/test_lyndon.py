import pytest

from raaglie.errors import NotLyndon
from raaglie.lyndon import (
    conjugacy_class,
    enumerate_lyndon,
    enumerate_lyndon_recursive,
    factorizations,
    is_lyndon_element,
    is_lyndon_word,
    lyndon_tree,
    lyndon_words,
    standard_factorization,
)
from raaglie.traces import Trace, enumerate_traces, init, zeta

from conftest import GRAPHS
from oracles import duval_lyndon_words, is_lyndon_by_definition, necklace_count

GRAPH_NAMES = sorted(GRAPHS)


def T(g, text):
    return Trace.parse(g, text)


def W(text):
    """'v1v2v1v3' -> (0, 1, 0, 2)"""
    return tuple(int(c) - 1 for c in text.replace("v", ""))


@pytest.mark.parametrize(
    "word, expected",
    [
        ("v1v2v1v3", True),
        ("v1v1v2", True),
        ("v1v1", False),
        ("v1v3v1v2", False),
        ("v2", True),
        ("", False),
    ],
)
def test_is_lyndon_word_examples(word, expected):
    assert is_lyndon_word(W(word)) is expected


def test_is_lyndon_element_examples(mini):
    assert is_lyndon_element(T(mini, "v1 v2 v3"))
    assert not is_lyndon_element(T(mini, "v2 v3"))
    for v in ("v1", "v2", "v3"):
        assert is_lyndon_element(T(mini, v))


LIST_OF_13 = {
    1: {"v1", "v2", "v3"},
    2: {"v1v2", "v1v3", "v2v3"},
    3: {"v1v1v2", "v1v1v3", "v1v2v3", "v2v2v3", "v1v2v2", "v1v3v3", "v2v3v3"},
}


def test_three_letters_up_to_length_three(edgeless3):
    found = enumerate_lyndon(edgeless3, 3)
    names = {n: {str(t.trace).replace(" ", "") for t in trees} for n, trees in found.items()}
    assert names[1] == LIST_OF_13[1] and names[2] == LIST_OF_13[2]
    # the familiar list of 13 misses v1v3v2, whose rotations are both larger
    assert names[3] - LIST_OF_13[3] == {"v1v3v2"}
    assert LIST_OF_13[3] <= names[3]
    assert is_lyndon_word(W("v1v3v2"))
    assert sum(map(len, names.values())) == 14 == sum(necklace_count(3, k) for k in (1, 2, 3))


def test_minigraph_lyndon_elements(mini):
    found = enumerate_lyndon(mini, 3)
    elements = {n: {str(lyndon_tree(t.trace).trace) for t in trees} for n, trees in found.items()}
    # length-3 traces are listed by their standard words; v1v2v3 has std v1v3v2
    assert elements == {
        1: {"v1", "v2", "v3"},
        2: {"v1 v2", "v1 v3"},
        3: {"v1 v1 v2", "v1 v1 v3", "v1 v2 v2", "v1 v3 v2", "v1 v3 v3"},
    }
    assert [t.bracketing() for t in found[3]] == [
        "[v1,[v1,v2]]", "[v1,[v1,v3]]", "[[v1,v2],v2]", "[[v1,v3],v2]", "[[v1,v3],v3]",
    ]


def test_complete_graph_has_only_letters(k3):
    found = enumerate_lyndon(k3, 5)
    assert len(found[1]) == 3
    assert all(not found[n] for n in range(2, 6))


def test_sorted_within_length(graph):
    for trees in enumerate_lyndon(graph, 5).values():
        words = [t.trace.word for t in trees]
        assert words == sorted(words)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_edgeless_matches_duval(r):
    from raaglie.graph import CommutationGraph

    g = CommutationGraph.edgeless(r)
    ours = sorted(w for ws in lyndon_words(g, 7).values() for w in ws)
    assert ours == sorted(duval_lyndon_words(r, 7))
    for k in range(1, 8):
        assert len(lyndon_words(g, 7)[k]) == necklace_count(r, k)


@pytest.mark.parametrize("name", GRAPH_NAMES)
def test_std_lyndon_word_iff_definition(name):
    g = GRAPHS[name]
    for n in range(1, 6):
        for t in enumerate_traces(g, n):
            assert is_lyndon_element(t) == is_lyndon_by_definition(g, t.word), t


@pytest.mark.parametrize("name", GRAPH_NAMES)
def test_dual_pipeline(name):
    g = GRAPHS[name]
    filtered = enumerate_lyndon(g, 6)
    recursive = enumerate_lyndon_recursive(g, 6)
    for n in range(1, 7):
        assert [t.trace for t in filtered[n]] == recursive[n]


@pytest.mark.parametrize("name", GRAPH_NAMES)
def test_init_is_single_vertex(name):
    for trees in enumerate_lyndon(GRAPHS[name], 6).values():
        for t in trees:
            assert len(init(t.trace)) == 1


def test_standard_factorization_examples(mini, edgeless2):
    assert standard_factorization(T(mini, "v1 v2 v3")) == (T(mini, "v1 v3"), T(mini, "v2"))
    assert standard_factorization(T(mini, "v1 v2")) == (T(mini, "v1"), T(mini, "v2"))
    assert standard_factorization(T(edgeless2, "v1 v1 v2")) == (T(edgeless2, "v1"), T(edgeless2, "v1 v2"))


def test_standard_factorization_errors(mini):
    with pytest.raises(NotLyndon):
        standard_factorization(T(mini, "v1"))
    with pytest.raises(NotLyndon):
        standard_factorization(T(mini, "v2 v3"))


@pytest.mark.parametrize("name", GRAPH_NAMES)
def test_standard_factorization_is_global_minimum(name):
    g = GRAPHS[name]
    for n in range(2, 6):
        for tree in enumerate_lyndon(g, n)[n]:
            m = tree.trace
            pairs = [
                (x, y) for x, y in factorizations(m)
                if x.word and y.word and is_lyndon_element(x) and is_lyndon_element(y)
            ]
            best = min(pairs, key=lambda p: p[1].word)
            assert standard_factorization(m) == best
            x, y = best
            assert x < y
            assert m.word == x.word + y.word


@pytest.mark.parametrize("name", GRAPH_NAMES)
def test_tree_invariants(name):
    for trees in enumerate_lyndon(GRAPHS[name], 6).values():
        for t in trees:
            if t.left is None:
                assert len(t) == 1
                continue
            assert t.left.trace * t.right.trace == t.trace
            assert t.left.trace < t.right.trace
            assert is_lyndon_element(t.left.trace) and is_lyndon_element(t.right.trace)


@pytest.mark.parametrize("name", GRAPH_NAMES)
def test_standard_split_theorem(name):
    """S(ab) = (a, b) iff |a| = 1 or S(a) = (x, y) with y >= b."""
    g = GRAPHS[name]
    lyn = enumerate_lyndon(g, 6)
    checked = 0
    for i in range(1, 6):
        for j in range(1, 7 - i):
            for ta in lyn[i]:
                for tb in lyn[j]:
                    a, b = ta.trace, tb.trace
                    if not (a < b and init(b) <= zeta(a)):
                        continue
                    ab = a * b
                    assert is_lyndon_element(ab)
                    lhs = standard_factorization(ab) == (a, b)
                    rhs = len(a) == 1 or standard_factorization(a)[1] >= b
                    assert lhs == rhs, (a, b)
                    checked += 1
    assert checked > 0 or name == "K3"


@pytest.mark.parametrize("name", GRAPH_NAMES)
def test_minimal_in_conjugacy_class(name):
    g = GRAPHS[name]
    for trees in enumerate_lyndon(g, 6).values():
        for t in trees:
            cls = conjugacy_class(t.trace)
            assert min(cls) == t.trace
            assert all(c == t.trace or c > t.trace for c in cls)


def test_transposition_is_not_transitive(mini):
    # v2v1v3 ~ v1v3v2 = v1v2v3 ~ v3v1v2 but no single transposition links the ends
    a, c = T(mini, "v2 v1 v3"), T(mini, "v3 v1 v2")
    single = {y * x for x, y in factorizations(a)}
    assert T(mini, "v1 v2 v3") in single
    assert c not in single
    assert c in conjugacy_class(a)
