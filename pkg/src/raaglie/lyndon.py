"""Lyndon words, Lyndon elements of the trace monoid and their bracketings."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import NotLyndon, ResourceLimitError
from .graph import CommutationGraph
from .traces import (
    DEFAULT_MAX_TRACES,
    Trace,
    Word,
    canonicalize,
    init,
    multiply,
    representatives,
    std_word,
    zeta,
)


def is_lyndon_word(w: Sequence[int]) -> bool:
    """Non-empty and strictly smaller than each of its proper suffixes."""
    w = tuple(w)
    return bool(w) and all(w < w[i:] for i in range(1, len(w)))


def is_lyndon_element(m: Trace) -> bool:
    return is_lyndon_word(m.word)


@dataclass(frozen=True)
class LyndonTree:
    """A Lyndon element with the bracketing given by standard factorization."""

    trace: Trace
    left: Optional["LyndonTree"] = None
    right: Optional["LyndonTree"] = None

    @property
    def split(self) -> Optional[tuple[Trace, Trace]]:
        if self.left is None:
            return None
        return self.left.trace, self.right.trace

    def __len__(self) -> int:
        return len(self.trace)

    def bracketing(self) -> str:
        """Nested bracket text such as ``[[v1,v3],v2]``."""
        if self.left is None:
            return self.trace.graph.labels[self.trace.word[0]]
        return f"[{self.left.bracketing()},{self.right.bracketing()}]"

    def __str__(self) -> str:
        return self.bracketing()


def _split_candidates(m: Trace):
    g = m.graph
    w = m.word
    for i in range(1, len(w)):
        # a prefix of a standard word is standard
        left, right = w[:i], std_word(g, w[i:])
        if is_lyndon_word(left) and is_lyndon_word(right):
            yield Trace(g, left), Trace(g, right)


def standard_factorization(m: Trace) -> tuple[Trace, Trace]:
    """The factorization ``m = x y`` into Lyndon elements with ``y`` minimal.

    The minimizing pair always splits the standard word of ``m``, so the search
    only runs over cut points of that word.
    """
    if len(m) < 2:
        raise NotLyndon(f"{m} has length < 2 and no standard factorization")
    if not is_lyndon_element(m):
        raise NotLyndon(f"{m} is not a Lyndon element")
    return min(_split_candidates(m), key=lambda pair: pair[1].word)


def lyndon_tree(m: Trace) -> LyndonTree:
    cache = m.graph._cache.setdefault("tree", {})
    tree = cache.get(m.word)
    if tree is None:
        if len(m) == 1:
            tree = LyndonTree(m)
        else:
            x, y = standard_factorization(m)
            tree = LyndonTree(m, lyndon_tree(x), lyndon_tree(y))
        cache[m.word] = tree
    return tree


def lyndon_words(
    g: CommutationGraph, max_len: int, max_count: int = DEFAULT_MAX_TRACES
) -> dict[int, list[Word]]:
    """Standard words that are Lyndon words, grouped by length, sorted."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    found: dict[int, list[Word]] = {n: [] for n in range(1, max_len + 1)}
    visited = 0

    def grow(prefix: Word):
        nonlocal visited
        for v in range(g.r):
            w = prefix + (v,)
            if std_word(g, w) != w:
                continue
            visited += 1
            if visited > max_count:
                raise ResourceLimitError(f"more than {max_count} traces visited")
            if is_lyndon_word(w):
                found[len(w)].append(w)
            if len(w) < max_len:
                grow(w)

    grow(())
    for words in found.values():
        words.sort()
    return found


def enumerate_lyndon(
    g: CommutationGraph, max_len: int, max_count: int = DEFAULT_MAX_TRACES
) -> dict[int, list[LyndonTree]]:
    """Lyndon elements of length ``1..max_len`` with their bracketing trees."""
    return {
        n: [lyndon_tree(Trace(g, w)) for w in words]
        for n, words in lyndon_words(g, max_len, max_count).items()
    }


def enumerate_lyndon_recursive(g: CommutationGraph, max_len: int) -> dict[int, list[Trace]]:
    """Independent generator: products ``x y`` of Lyndon elements with
    ``x < y`` and ``init(y)`` inside ``zeta(x)``, deduplicated as traces."""
    by_len: dict[int, list[Trace]] = {1: [Trace(g, (v,)) for v in range(g.r)]}
    for n in range(2, max_len + 1):
        made = set()
        for i in range(1, n):
            for x in by_len[i]:
                z = zeta(x)
                for y in by_len[n - i]:
                    if x < y and init(y) <= z:
                        made.add(multiply(x, y))
        by_len[n] = sorted(made)
    return by_len


def factorizations(m: Trace) -> set[tuple[Trace, Trace]]:
    """All ways of writing ``m = x y`` with ``x`` and ``y`` traces (brute force)."""
    g = m.graph
    out = set()
    for w in representatives(m):
        for i in range(len(w) + 1):
            out.add((canonicalize(g, w[:i]), canonicalize(g, w[i:])))
    return out


def conjugacy_class(m: Trace) -> set[Trace]:
    """Closure of ``{m}`` under transpositions ``x y -> y x``. Exponential."""
    seen = {m}
    stack = [m]
    while stack:
        t = stack.pop()
        for x, y in factorizations(t):
            c = multiply(y, x)
            if c not in seen:
                seen.add(c)
                stack.append(c)
    return seen
