"""Commutation graphs.

A :class:`CommutationGraph` fixes the generators of the right-angled Artin
group and the total order ``v1 < v2 < ... < vr`` used everywhere else in the
package. Vertices are addressed internally by their index ``0 .. r-1``; the
order of the labels is the order of the input document.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphError, ResourceLimitError

DEFAULT_MAX_VERTICES = 16


@dataclass(frozen=True)
class CommutationGraph:
    labels: tuple[str, ...]
    edges: frozenset[frozenset[int]]
    # per-graph memo tables (trace products, Lyndon trees, expansions)
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        r = len(self.labels)
        adjacent = [0] * r
        for e in self.edges:
            i, j = tuple(e)
            adjacent[i] |= 1 << j
            adjacent[j] |= 1 << i
        full = (1 << r) - 1
        object.__setattr__(self, "adjacent_mask", tuple(adjacent))
        # letters that do not commute with v, v itself included
        object.__setattr__(self, "blocking_mask", tuple(full & ~m for m in adjacent))
        object.__setattr__(self, "index", {name: i for i, name in enumerate(self.labels)})

    @classmethod
    def from_edges(
        cls,
        labels: Sequence[str],
        edges: Iterable[Sequence[str]] = (),
        max_vertices: int = DEFAULT_MAX_VERTICES,
    ) -> "CommutationGraph":
        labels = tuple(labels)
        if not labels:
            raise GraphError("graph needs at least one vertex")
        if len(labels) > max_vertices:
            raise ResourceLimitError(
                f"{len(labels)} vertices exceeds the configured maximum of {max_vertices}"
            )
        index = {}
        for i, name in enumerate(labels):
            if not isinstance(name, str) or not name:
                raise GraphError(f"vertex names must be non-empty strings, got {name!r}")
            if name in index:
                raise GraphError(f"duplicate vertex name {name!r}")
            index[name] = i
        pairs = set()
        for edge in edges:
            if len(edge) != 2:
                raise GraphError(f"edge {edge!r} must have exactly two endpoints")
            a, b = edge
            for end in (a, b):
                if end not in index:
                    raise GraphError(f"edge endpoint {end!r} is not a vertex")
            if a == b:
                raise GraphError(f"self-loop at {a!r}")
            pairs.add(frozenset((index[a], index[b])))
        return cls(labels, frozenset(pairs))

    @classmethod
    def edgeless(cls, r: int) -> "CommutationGraph":
        return cls.from_edges([f"v{i + 1}" for i in range(r)])

    @classmethod
    def complete(cls, r: int) -> "CommutationGraph":
        labels = [f"v{i + 1}" for i in range(r)]
        return cls.from_edges(labels, itertools.combinations(labels, 2))

    @property
    def r(self) -> int:
        return len(self.labels)

    def commute(self, i: int, j: int) -> bool:
        """True when generators ``i`` and ``j`` commute (including ``i == j``)."""
        return i == j or bool(self.adjacent_mask[i] >> j & 1)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adjacent_mask[i] >> j & 1)

    def vertex(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise GraphError(f"unknown vertex {name!r}") from None

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.adjacent(a, b) for a, b in itertools.combinations(vs, 2))

    def to_json(self) -> dict:
        edges = sorted(tuple(sorted(e)) for e in self.edges)
        return {
            "vertices": list(self.labels),
            "edges": [[self.labels[i], self.labels[j]] for i, j in edges],
        }


def parse_graph(text: str, max_vertices: int = DEFAULT_MAX_VERTICES) -> CommutationGraph:
    """Parse and validate a graph document ``{"vertices": [...], "edges": [[a, b], ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"graph document is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("vertices"), list):
        raise GraphError('graph document needs a "vertices" array')
    edges = doc.get("edges", [])
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise GraphError('"edges" must be an array of 2-element arrays')
    return CommutationGraph.from_edges(doc["vertices"], edges, max_vertices=max_vertices)


def serialize_graph(g: CommutationGraph) -> str:
    return json.dumps(g.to_json())


def cliques(g: CommutationGraph) -> list[tuple[int, ...]]:
    """All complete vertex subsets, the empty one included, ordered by size then lex."""
    found: list[tuple[int, ...]] = [()]
    frontier: list[tuple[int, ...]] = [()]
    while frontier:
        grown = []
        for c in frontier:
            start = c[-1] + 1 if c else 0
            for v in range(start, g.r):
                if all(g.adjacent(u, v) for u in c):
                    grown.append(c + (v,))
        grown.sort()
        found.extend(grown)
        frontier = grown
    return found
