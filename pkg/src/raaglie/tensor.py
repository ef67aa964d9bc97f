"""Exact sparse arithmetic in the trace algebra, truncated at a fixed degree.

A :class:`Polynomial` is a finite integer combination of traces of length at
most ``truncation``. Products drop everything above that degree, so a
polynomial stands for the class of a power series modulo terms of degree
``truncation + 1``. Terms are keyed internally by standard words.
"""
from __future__ import annotations

import contextlib
import contextvars
from typing import Iterable, Iterator, Mapping

from .errors import NonHomogeneous, NotAUnit, ResourceLimitError, TruncationMismatch
from .graph import CommutationGraph
from .traces import Trace, Word, canonicalize, concat_std

DEFAULT_MAX_TERMS = 10**6

_max_terms = contextvars.ContextVar("max_terms", default=DEFAULT_MAX_TERMS)


@contextlib.contextmanager
def term_limit(n: int):
    """Cap the number of terms any product may produce inside the block."""
    token = _max_terms.set(n)
    try:
        yield
    finally:
        _max_terms.reset(token)


class Polynomial:
    __slots__ = ("graph", "truncation", "_terms")

    def __init__(self, graph: CommutationGraph, truncation: int, terms: Mapping[Word, int] = ()):
        if truncation < 0:
            raise ValueError("truncation degree must be non-negative")
        self.graph = graph
        self.truncation = truncation
        clean = {}
        for w, c in dict(terms).items():
            if c and len(w) <= truncation:
                clean[w] = c
        self._terms = clean

    @classmethod
    def _raw(cls, graph, truncation, terms):
        # terms already filtered: no zero coefficients, nothing above truncation
        p = cls.__new__(cls)
        p.graph, p.truncation, p._terms = graph, truncation, terms
        return p

    @classmethod
    def zero(cls, graph: CommutationGraph, truncation: int) -> "Polynomial":
        return cls(graph, truncation)

    @classmethod
    def one(cls, graph: CommutationGraph, truncation: int) -> "Polynomial":
        return cls(graph, truncation, {(): 1})

    @classmethod
    def generator(cls, graph: CommutationGraph, v: int, truncation: int) -> "Polynomial":
        return cls(graph, truncation, {(v,): 1})

    @classmethod
    def from_traces(cls, graph: CommutationGraph, truncation: int,
                    items: Iterable[tuple[Trace, int]]) -> "Polynomial":
        acc: dict[Word, int] = {}
        for t, c in items:
            acc[t.word] = acc.get(t.word, 0) + c
        return cls(graph, truncation, acc)

    # -- inspection ---------------------------------------------------------

    def items(self) -> Iterator[tuple[Trace, int]]:
        """(trace, coefficient) pairs in increasing trace order."""
        g = self.graph
        for w in sorted(self._terms):
            yield Trace(g, w), self._terms[w]

    @property
    def terms(self) -> dict[Trace, int]:
        return dict(self.items())

    def word_terms(self) -> dict[Word, int]:
        return dict(self._terms)

    def coefficient(self, t: Trace | Word) -> int:
        w = t.word if isinstance(t, Trace) else tuple(t)
        return self._terms.get(w, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(): 1}

    @property
    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def degrees(self) -> set[int]:
        return {len(w) for w in self._terms}

    def homogeneous_part(self, i: int) -> "Polynomial":
        return Polynomial._raw(
            self.graph, self.truncation,
            {w: c for w, c in self._terms.items() if len(w) == i},
        )

    def lowest_degree(self, start: int = 0) -> int | None:
        """Smallest degree ``>= start`` carrying a nonzero term."""
        ds = [len(w) for w in self._terms if len(w) >= start]
        return min(ds) if ds else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_degree(self) -> int | None:
        ds = self.degrees()
        if len(ds) > 1:
            raise NonHomogeneous(f"polynomial has terms in degrees {sorted(ds)}")
        return next(iter(ds), None)

    def retruncate(self, n: int) -> "Polynomial":
        return Polynomial(self.graph, n, self._terms)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if self.truncation != other.truncation:
            raise TruncationMismatch(
                f"truncation degrees differ: {self.truncation} vs {other.truncation}"
            )
        if self.graph is not other.graph and self.graph != other.graph:
            raise TruncationMismatch("polynomials live over different graphs")

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.truncation == other.truncation and self._terms == other._terms
                and (self.graph is other.graph or self.graph == other.graph))

    __hash__ = None

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            s = acc.get(w, 0) + c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        return Polynomial._raw(self.graph, self.truncation, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.graph, self.truncation, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, k: int) -> "Polynomial":
        if not k:
            return Polynomial.zero(self.graph, self.truncation)
        return Polynomial._raw(self.graph, self.truncation, {w: k * c for w, c in self._terms.items()})

    def __rmul__(self, k: int) -> "Polynomial":
        if isinstance(k, int):
            return self.scale(k)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return multiply(self, other)

    def __pow__(self, n: int) -> "Polynomial":
        return power(self, n)

    # -- display and serialization -----------------------------------------

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self}, truncation={self.truncation})"

    def to_json(self) -> dict:
        return {
            "truncation": self.truncation,
            "terms": [{"coeff": str(c), "trace": t.names} for t, c in self.items()],
        }

    @classmethod
    def from_json(cls, graph: CommutationGraph, doc: Mapping) -> "Polynomial":
        items = []
        for term in doc["terms"]:
            t = canonicalize(graph, [graph.vertex(n) for n in term["trace"]])
            items.append((t, int(term["coeff"])))
        return cls.from_traces(graph, int(doc["truncation"]), items)


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def scale(a: Polynomial, k: int) -> Polynomial:
    return a.scale(k)


def multiply(a: Polynomial, b: Polynomial) -> Polynomial:
    a._check(b)
    g, n = a.graph, a.truncation
    limit = _max_terms.get()
    acc: dict[Word, int] = {}
    right = list(b._terms.items())
    for wa, ca in a._terms.items():
        room = n - len(wa)
        for wb, cb in right:
            if len(wb) > room:
                continue
            w = concat_std(g, wa, wb)
            acc[w] = acc.get(w, 0) + ca * cb
        if len(acc) > limit:
            raise ResourceLimitError(f"product exceeds {limit} terms")
    return Polynomial._raw(g, n, {w: c for w, c in acc.items() if c})


def power(a: Polynomial, e: int) -> Polynomial:
    """``a**e`` by repeated squaring; negative ``e`` inverts first."""
    if e < 0:
        return power(invert_unit(a), -e)
    result = Polynomial.one(a.graph, a.truncation)
    base = a
    while e:
        if e & 1:
            result = multiply(result, base)
        e >>= 1
        if e:
            base = multiply(base, base)
    return result


def invert_unit(a: Polynomial) -> Polynomial:
    """Inverse of ``1 + x`` (or ``-1 + x``) modulo degree ``truncation + 1``.

    Degree by degree: ``c_0 = 1`` and ``c_i = -sum_{j<i} c_j a_{i-j}``.
    """
    c0 = a.constant_term
    if c0 == -1:
        return -invert_unit(-a)
    if c0 != 1:
        raise NotAUnit(f"constant term {c0} is not +1 or -1")
    g, n = a.graph, a.truncation
    parts = [a.homogeneous_part(i) for i in range(n + 1)]
    inv = [Polynomial.one(g, n)]
    for i in range(1, n + 1):
        acc = Polynomial.zero(g, n)
        for j in range(i):
            if inv[j] and parts[i - j]:
                acc = acc + multiply(inv[j], parts[i - j])
        inv.append(-acc)
    total = Polynomial.zero(g, n)
    for p in inv:
        total = total + p
    return total


def lie_bracket(a: Polynomial, b: Polynomial) -> Polynomial:
    return multiply(a, b) - multiply(b, a)


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    g = p.graph
    pieces = []
    for t, c in p.items():
        mono = "*".join(g.labels[v] for v in t.word)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out

