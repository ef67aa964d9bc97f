"""The partially commutative free Lie algebra inside the trace algebra.

Each Lyndon element ``m`` expands to the Lie polynomial obtained by reading its
standard bracketing with ``[a, b] = ab - ba``. That polynomial has ``m`` itself
as its smallest trace, with coefficient 1, which makes rewriting any Lie
polynomial in the Lyndon basis a triangular elimination with unit pivots.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import NonHomogeneous, NotInLieSubalgebra, NotLyndon
from .graph import CommutationGraph
from .lyndon import LyndonTree, is_lyndon_word, lyndon_tree, lyndon_words
from .tensor import Polynomial, lie_bracket
from .traces import Trace, Word

TreeLike = Union[LyndonTree, Trace]


def as_tree(t: TreeLike) -> LyndonTree:
    if isinstance(t, LyndonTree):
        return t
    if not is_lyndon_word(t.word):
        raise NotLyndon(f"{t} is not a Lyndon element")
    return lyndon_tree(t)


def _expansion_terms(tree: LyndonTree) -> dict[Word, int]:
    g = tree.trace.graph
    cache = g._cache.setdefault("expand", {})
    key = tree.trace.word
    terms = cache.get(key)
    if terms is None:
        n = len(key)
        if n == 1:
            terms = {key: 1}
        else:
            left = Polynomial(g, n, _expansion_terms(tree.left))
            right = Polynomial(g, n, _expansion_terms(tree.right))
            terms = lie_bracket(left, right).word_terms()
        cache[key] = terms
    return terms


def expand(t: TreeLike, truncation: int | None = None) -> Polynomial:
    """The Lie polynomial of a bracketed Lyndon element."""
    tree = as_tree(t)
    n = len(tree.trace)
    if truncation is None:
        truncation = n
    if n > truncation:
        raise ValueError(f"degree {n} exceeds truncation {truncation}")
    return Polynomial(tree.trace.graph, truncation, _expansion_terms(tree))


@dataclass(frozen=True)
class LyndonCoordinates:
    """Integer coordinates of a homogeneous Lie polynomial in the Lyndon basis."""

    degree: int
    entries: dict[Trace, int] = field(default_factory=dict)

    def __post_init__(self):
        for m in self.entries:
            if len(m) != self.degree:
                raise ValueError(f"{m} does not have length {self.degree}")

    def __bool__(self) -> bool:
        return any(self.entries.values())

    def items(self) -> list[tuple[Trace, int]]:
        return sorted(self.entries.items(), key=lambda kv: kv[0].word)

    def by_word(self) -> dict[Word, int]:
        return {m.word: c for m, c in self.entries.items()}

    def __neg__(self) -> "LyndonCoordinates":
        return LyndonCoordinates(self.degree, {m: -c for m, c in self.entries.items()})

    def to_polynomial(self, graph: CommutationGraph, truncation: int | None = None) -> Polynomial:
        """Re-expand: the sum of ``c * expand(m)``."""
        n = self.degree if truncation is None else truncation
        total = Polynomial.zero(graph, n)
        for m, c in self.entries.items():
            total = total + expand(m, n).scale(c)
        return total

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"lyndon": m.names, "coeff": str(c)} for m, c in self.items()],
        }

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(f"{c}*{lyndon_tree(m)}" for m, c in self.items()).replace("+ -", "- ")


def lyndon_coordinates(p: Polynomial, k: int) -> LyndonCoordinates:
    """Write a homogeneous degree-``k`` polynomial in the Lyndon basis.

    Repeatedly peel off the smallest remaining trace ``m`` (which must be a
    Lyndon element) with its coefficient ``c``, subtracting ``c * expand(m)``.
    The smallest trace strictly increases at each step, so this terminates.
    """
    degrees = p.degrees()
    if degrees - {k}:
        raise NonHomogeneous(f"expected degree {k}, found degrees {sorted(degrees)}")
    g = p.graph
    remaining = p.word_terms()
    entries: dict[Trace, int] = {}
    while remaining:
        w = min(remaining)
        c = remaining[w]
        if not is_lyndon_word(w):
            raise NotInLieSubalgebra(
                f"smallest remaining trace {Trace(g, w)} is not a Lyndon element"
            )
        entries[Trace(g, w)] = c
        for u, d in _expansion_terms(lyndon_tree(Trace(g, w))).items():
            s = remaining.get(u, 0) - c * d
            if s:
                remaining[u] = s
            else:
                remaining.pop(u, None)
    return LyndonCoordinates(k, entries)


def structure_constants(a: TreeLike, b: TreeLike) -> LyndonCoordinates:
    """Coordinates of ``[expand(a), expand(b)]`` in the Lyndon basis."""
    ta, tb = as_tree(a), as_tree(b)
    k = len(ta.trace) + len(tb.trace)
    if ta.trace == tb.trace:
        return LyndonCoordinates(k)
    if ta.trace > tb.trace:
        return -structure_constants(tb, ta)
    # closure of the Lyndon span under brackets: NotInLieSubalgebra here is a bug
    return lyndon_coordinates(lie_bracket(expand(ta, k), expand(tb, k)), k)

def graded_rank(g: CommutationGraph, k: int) -> int:
    """Number of Lyndon elements of length ``k``."""
    if k < 1:
        raise ValueError("degree must be at least 1")
    return len(lyndon_words(g, k)[k])


def lyndon_basis(g: CommutationGraph, k: int) -> list[LyndonTree]:
    return [lyndon_tree(Trace(g, w)) for w in lyndon_words(g, k)[k]]

