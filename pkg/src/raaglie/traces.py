"""The free partially commutative monoid on a commutation graph.

Every trace is stored as its standard representative: the lexicographically
greatest word in its class. It is produced greedily by repeatedly emitting the
largest letter that can be moved to the front of what remains. Python's tuple
ordering (empty first, prefix before extension, then first differing letter)
is exactly the word order, so traces compare by their stored words.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import GraphError, ResourceLimitError, WordSyntaxError
from .graph import CommutationGraph

Word = tuple[int, ...]

DEFAULT_MAX_TRACES = 2_000_000


def std_word(g: CommutationGraph, letters: Sequence[int]) -> Word:
    """Lex-greatest word equivalent to ``letters`` under commuting swaps."""
    remaining = list(letters)
    blocking = g.blocking_mask
    out = []
    while remaining:
        blocked = 0
        best = -1
        best_pos = -1
        for pos, v in enumerate(remaining):
            if not blocked >> v & 1 and v > best:
                best, best_pos = v, pos
            blocked |= blocking[v]
        out.append(best)
        del remaining[best_pos]
    return tuple(out)


def concat_std(g: CommutationGraph, a: Word, b: Word) -> Word:
    """Standard word of the product of two standard words (memoized per graph)."""
    if not b:
        return a
    if not a:
        return b
    cache = g._cache.setdefault("concat", {})
    key = (a, b)
    hit = cache.get(key)
    if hit is None:
        hit = cache[key] = std_word(g, a + b)
    return hit


@dataclass(frozen=True, eq=False)
class Trace:
    """Element of the trace monoid, held in standard form.

    Build instances with :func:`canonicalize` or :meth:`parse`; the
    constructor trusts that ``word`` is already standard.
    """

    graph: CommutationGraph
    word: Word

    def __hash__(self):
        return hash(self.word)

    def __eq__(self, other):
        if not isinstance(other, Trace):
            return NotImplemented
        return self.word == other.word and (self.graph is other.graph or self.graph == other.graph)

    def __lt__(self, other: "Trace") -> bool:
        return self.word < other.word

    def __le__(self, other: "Trace") -> bool:
        return self.word <= other.word

    def __gt__(self, other: "Trace") -> bool:
        return self.word > other.word

    def __ge__(self, other: "Trace") -> bool:
        return self.word >= other.word

    def __mul__(self, other: "Trace") -> "Trace":
        return multiply(self, other)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    @cached_property
    def multidegree(self) -> tuple[int, ...]:
        counts = [0] * self.graph.r
        for v in self.word:
            counts[v] += 1
        return tuple(counts)

    @property
    def names(self) -> list[str]:
        return [self.graph.labels[v] for v in self.word]

    def __str__(self) -> str:
        return " ".join(self.names) if self.word else "1"

    def __repr__(self) -> str:
        return f"Trace({self})"

    @classmethod
    def parse(cls, g: CommutationGraph, text: str) -> "Trace":
        """Parse whitespace-separated vertex names, e.g. ``"v1 v3 v2"``."""
        letters = []
        for name in text.split():
            if name not in g.index:
                raise WordSyntaxError(f"unknown vertex {name!r}")
            letters.append(g.index[name])
        return canonicalize(g, letters)


def identity(g: CommutationGraph) -> Trace:
    return Trace(g, ())


def letter(g: CommutationGraph, v: int) -> Trace:
    return Trace(g, (v,))


def canonicalize(g: CommutationGraph, letters: Iterable[int]) -> Trace:
    letters = tuple(letters)
    for v in letters:
        if not 0 <= v < g.r:
            raise GraphError(f"vertex index {v} out of range for r={g.r}")
    return Trace(g, std_word(g, letters))


def multiply(a: Trace, b: Trace) -> Trace:
    return Trace(a.graph, concat_std(a.graph, a.word, b.word))


def compare(a: Trace, b: Trace) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    return (a.word > b.word) - (a.word < b.word)


def supp(m: Trace) -> frozenset[int]:
    return frozenset(m.word)


def _available_front(g: CommutationGraph, word: Sequence[int]) -> frozenset[int]:
    blocked = 0
    found = set()
    for v in word:
        if not blocked >> v & 1:
            found.add(v)
        blocked |= g.blocking_mask[v]
    return frozenset(found)


def init(m: Trace) -> frozenset[int]:
    """Letters that can start some representative of ``m``."""
    return _available_front(m.graph, m.word)


def term(m: Trace) -> frozenset[int]:
    """Letters that can end some representative of ``m``."""
    return _available_front(m.graph, m.word[::-1])


def zeta(m: Trace) -> frozenset[int]:
    g = m.graph
    mask = 0
    for v in set(m.word):
        mask |= g.blocking_mask[v]
    return frozenset(v for v in range(g.r) if mask >> v & 1)


def is_square_free(m: Trace) -> bool:
    g = m.graph
    w = m.word
    for i, v in enumerate(w):
        for u in w[i + 1:]:
            if u == v:
                return False
            if not g.adjacent(u, v):
                break
    return True


def enumerate_traces(
    g: CommutationGraph, n: int, max_count: int = DEFAULT_MAX_TRACES
) -> list[Trace]:
    """All traces of length exactly ``n``, in increasing order.

    Depth-first over standard words; a prefix of a standard word is standard,
    so a branch is cut as soon as the prefix stops being its own standard form.
    """
    if n < 0:
        raise ValueError("length must be non-negative")
    out: list[Trace] = []

    def grow(prefix: Word):
        if len(prefix) == n:
            out.append(Trace(g, prefix))
            if len(out) > max_count:
                raise ResourceLimitError(f"more than {max_count} traces of length {n}")
            return
        for v in range(g.r):
            w = prefix + (v,)
            if std_word(g, w) == w:
                grow(w)

    grow(())
    return out


def representatives(m: Trace) -> set[Word]:
    """Every word in the class of ``m``, by closure under commuting swaps.

    Exponential; intended for checking small cases.
    """
    g = m.graph
    seen = {m.word}
    stack = [m.word]
    while stack:
        w = stack.pop()
        for i in range(len(w) - 1):
            if w[i] != w[i + 1] and g.adjacent(w[i], w[i + 1]):
                s = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                if s not in seen:
                    seen.add(s)
                    stack.append(s)
    return seen


def format_word(g: CommutationGraph, word: Sequence[int]) -> str:
    return " ".join(g.labels[v] for v in word) if word else "1"
