"""The Magnus map into truncated power series, and the filtration it defines.

Each generator ``v`` goes to ``1 + v``. An element lies in the ``k``-th
filtration term when its expansion is ``1`` plus terms of degree ``>= k``;
that term coincides with the ``k``-th term of the lower central series, and
the degree-``k`` part of the expansion gives coordinates in the quotient by
the next term.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInFiltration
from .groupwords import GroupWord, commutator, fully_reduce
from .liealg import LyndonCoordinates, TreeLike, as_tree, lyndon_coordinates
from .lyndon import LyndonTree
from .tensor import Polynomial, invert_unit, multiply, power


@dataclass(frozen=True)
class AtLeast:
    """Expansion is trivial below degree ``bound``; the exact degree is undetermined."""

    bound: int

    def __str__(self) -> str:
        return f">= {self.bound}"


@dataclass(frozen=True)
class MagnusExpansion:
    source: GroupWord
    truncation: int
    value: Polynomial

    def __post_init__(self):
        assert self.value.constant_term == 1

    def part(self, k: int) -> Polynomial:
        return self.value.homogeneous_part(k)


def _syllable_series(g, v: int, e: int, n: int) -> Polynomial:
    cache = g._cache.setdefault("magnus_syllable", {})
    key = (v, e, n)
    hit = cache.get(key)
    if hit is None:
        base = Polynomial(g, n, {(): 1, (v,): 1})
        if e < 0:
            base = invert_unit(base)
        hit = cache[key] = power(base, abs(e))
    return hit


def magnus(w: GroupWord, truncation: int) -> MagnusExpansion:
    """Expansion of ``w`` modulo terms of degree ``truncation + 1``."""
    if truncation < 1:
        raise ValueError("truncation must be at least 1")
    g = w.graph
    value = Polynomial.one(g, truncation)
    for v, e in w.syllables:
        value = multiply(value, _syllable_series(g, v, e, truncation))
    return MagnusExpansion(w, truncation, value)


def derivation(w: GroupWord, truncation: int) -> tuple[int, Polynomial] | None:
    """Lowest nonzero homogeneous part of positive degree, or ``None``.

    ``None`` means the expansion is ``1`` up to degree ``truncation``; it does
    not by itself say that ``w`` is trivial.
    """
    value = magnus(w, truncation).value
    k = value.lowest_degree(start=1)
    if k is None:
        return None
    return k, value.homogeneous_part(k)


def filtration_degree(w: GroupWord, truncation: int) -> int | AtLeast:
    found = derivation(w, truncation)
    if found is None:
        return AtLeast(truncation + 1)
    return found[0]


def lcs_coordinates(w: GroupWord, k: int, truncation: int | None = None) -> LyndonCoordinates:
    """Lyndon-basis coordinates of ``w`` in the ``k``-th lower central quotient."""
    n = k if truncation is None else truncation
    if n < k:
        raise ValueError(f"truncation {n} is below the degree {k}")
    value = magnus(w, n).value
    low = value.lowest_degree(start=1)
    if low is not None and low < k:
        raise NotInFiltration(f"{w} has filtration degree {low} < {k}")
    return lyndon_coordinates(value.homogeneous_part(k), k)


def commutator_word(t: TreeLike) -> GroupWord:
    """Group element of a bracketing, read as nested commutators, fully reduced."""
    tree = as_tree(t)
    return fully_reduce(_commutator_word(tree))


def _commutator_word(tree: LyndonTree) -> GroupWord:
    g = tree.trace.graph
    if tree.left is None:
        return GroupWord.generator(g, tree.trace.word[0])
    return commutator(_commutator_word(tree.left), _commutator_word(tree.right))
