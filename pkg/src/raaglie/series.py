"""Clique polynomial, growth series of the trace monoid, and a product check.

Series are plain lists of Python ints indexed by degree. This kernel is kept
separate from the trace algebra on purpose: it is the independent side of a
cross-check between the Lyndon counts and the number of traces per length.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graph import CommutationGraph, cliques
from .lyndon import lyndon_words

IntegerSeries = list[int]


def clique_polynomial(g: CommutationGraph) -> IntegerSeries:
    """Coefficient ``k`` counts the ``k``-element cliques."""
    counts: IntegerSeries = []
    for c in cliques(g):
        while len(counts) <= len(c):
            counts.append(0)
        counts[len(c)] += 1
    return counts


def series_mul(a: IntegerSeries, b: IntegerSeries, n: int) -> IntegerSeries:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def series_inverse(a: IntegerSeries, n: int) -> IntegerSeries:
    if not a or a[0] not in (1, -1):
        raise ValueError("series needs constant term +1 or -1 to invert over the integers")
    inv = [0] * (n + 1)
    inv[0] = a[0]
    for i in range(1, n + 1):
        s = sum(a[j] * inv[i - j] for j in range(1, min(i, len(a) - 1) + 1))
        inv[i] = -a[0] * s
    return inv


def growth_series(g: CommutationGraph, n: int) -> IntegerSeries:
    """Number of traces of each length ``0..n``.

    Inverse of the alternating clique polynomial ``sum (-1)^k c_k t^k``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    alternating = [(-1) ** k * c for k, c in enumerate(clique_polynomial(g))]
    return series_inverse(alternating, n)


def inverse_power_of_binomial(k: int, r: int, n: int) -> IntegerSeries:
    """``(1 - t^k)^(-r)`` truncated at degree ``n``."""
    out = [0] * (n + 1)
    for j in range(n // k + 1):
        out[k * j] = comb(r + j - 1, j) if r else int(j == 0)
    return out


@dataclass(frozen=True)
class WittReport:
    lhs: IntegerSeries
    rhs: IntegerSeries
    ranks: IntegerSeries

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "equal": self.equal}


def witt_product_check(g: CommutationGraph, n: int) -> WittReport:
    """Compare ``prod_k (1 - t^k)^(-r_k)`` (``r_k`` = Lyndon count) with the growth series."""
    if n < 1:
        raise ValueError("n must be at least 1")
    words = lyndon_words(g, n)
    ranks = [len(words[k]) for k in range(1, n + 1)]
    lhs = [1] + [0] * n
    for k, r in enumerate(ranks, start=1):
        lhs = series_mul(lhs, inverse_power_of_binomial(k, r, n), n)
    return WittReport(lhs, growth_series(g, n), ranks)
