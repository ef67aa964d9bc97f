"""Elements of the right-angled Artin group as syllable words.

A word is a sequence of syllables ``(vertex, exponent)``. The reduction moves
are: drop a zero exponent, merge two adjacent syllables on the same vertex,
and swap two adjacent syllables whose vertices commute. A word is fully
reduced when no two syllables on the same vertex can be brought together by
swaps. Fully reduced forms of one element differ only by swaps, so choosing
the greedy-largest ordering of syllables gives a normal form.

The greedy ordering is a convention of this package: at each step emit the
available syllable with the largest vertex index (ties, which cannot occur in
a fully reduced word, go to the larger exponent).
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import WordSyntaxError
from .graph import CommutationGraph

Syllable = tuple[int, int]


@dataclass(frozen=True)
class GroupWord:
    graph: CommutationGraph
    syllables: tuple[Syllable, ...]

    def __post_init__(self):
        clean = tuple((int(v), int(e)) for v, e in self.syllables if e)
        for v, _ in clean:
            if not 0 <= v < self.graph.r:
                raise ValueError(f"vertex index {v} out of range")
        object.__setattr__(self, "syllables", clean)

    @classmethod
    def identity(cls, g: CommutationGraph) -> "GroupWord":
        return cls(g, ())

    @classmethod
    def generator(cls, g: CommutationGraph, v: int, e: int = 1) -> "GroupWord":
        return cls(g, ((v, e),))

    @classmethod
    def parse(cls, g: CommutationGraph, text: str) -> "GroupWord":
        return parse_word(g, text)

    def __len__(self) -> int:
        return len(self.syllables)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.graph, self.syllables + other.syllables)

    def __pow__(self, n: int) -> "GroupWord":
        base = self if n >= 0 else self.inverse()
        return GroupWord(self.graph, base.syllables * abs(n))

    def inverse(self) -> "GroupWord":
        return GroupWord(self.graph, tuple((v, -e) for v, e in reversed(self.syllables)))

    def letters(self) -> tuple[int, ...]:
        """Letter sequence of a positive word (each syllable ``v^e`` as ``e`` copies of ``v``)."""
        if any(e < 0 for _, e in self.syllables):
            raise ValueError("word has negative exponents")
        return tuple(v for v, e in self.syllables for _ in range(e))

    def __str__(self) -> str:
        return format_word(self)


def commutator(x: GroupWord, y: GroupWord) -> GroupWord:
    """``[x, y] = x y x^-1 y^-1``."""
    return x * y * x.inverse() * y.inverse()


def conjugate(x: GroupWord, y: GroupWord) -> GroupWord:
    """``x y x^-1``."""
    return x * y * x.inverse()


def format_word(w: GroupWord) -> str:
    if not w.syllables:
        return "1"
    labels = w.graph.labels
    return " ".join(labels[v] if e == 1 else f"{labels[v]}^{e}" for v, e in w.syllables)


_TOKEN = re.compile(r"\s*(?:([\[\],])|([^\s\[\],^]+))(?:\^([+-]?\d+))?")


def parse_word(g: CommutationGraph, text: str) -> GroupWord:
    """Parse ``"v1 v2^-1 [v1,[v2,v3]]^2"``; brackets are group commutators."""
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise WordSyntaxError(f"cannot parse word at {text[pos:]!r}")
        punct, name, exp = m.groups()
        if punct and exp is not None and punct != "]":
            raise WordSyntaxError(f"exponent after {punct!r}")
        tokens.append((punct, name, int(exp) if exp is not None else 1))
        pos = m.end()

    i = 0

    def sequence() -> list[Syllable]:
        nonlocal i
        out: list[Syllable] = []
        while i < len(tokens):
            punct, name, exp = tokens[i]
            if punct in (",", "]"):
                break
            i += 1
            if punct == "[":
                x = GroupWord(g, tuple(sequence()))
                expect(",")
                y = GroupWord(g, tuple(sequence()))
                _, _, exp = expect("]")
                out.extend((commutator(x, y) ** exp).syllables)
            elif name == "1" and "1" not in g.index:
                continue
            else:
                if name not in g.index:
                    raise WordSyntaxError(f"unknown vertex {name!r}")
                out.append((g.index[name], exp))
        return out

    def expect(p: str):
        nonlocal i
        if i >= len(tokens) or tokens[i][0] != p:
            raise WordSyntaxError(f"expected {p!r} in {text!r}")
        i += 1
        return tokens[i - 1]

    syllables = sequence()
    if i != len(tokens):
        raise WordSyntaxError(f"unbalanced brackets in {text!r}")
    return GroupWord(g, tuple(syllables))


def fully_reduce(w: GroupWord) -> GroupWord:
    """A fully reduced word for the same element.

    Each incoming syllable slides left over syllables it commutes with and
    merges into the first syllable on its own vertex it meets, if any.
    Removing a cancelled syllable cannot create a new mergeable pair: every
    syllable to its right commutes with it.
    """
    g = w.graph
    out: list[list[int]] = []
    for v, e in w.syllables:
        for k in range(len(out) - 1, -1, -1):
            u = out[k][0]
            if u == v:
                out[k][1] += e
                if not out[k][1]:
                    del out[k]
                break
            if not g.adjacent(u, v):
                out.append([v, e])
                break
        else:
            out.append([v, e])
    return GroupWord(g, tuple((v, e) for v, e in out))


def _mergeable_pairs(g: CommutationGraph, syl: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    pairs = []
    for i, (v, _) in enumerate(syl):
        for j in range(i + 1, len(syl)):
            u = syl[j][0]
            if u == v:
                pairs.append((i, j))
                break
            if not g.adjacent(u, v):
                break
    return pairs


def is_fully_reduced(w: GroupWord) -> bool:
    return not _mergeable_pairs(w.graph, w.syllables)


def _greedy_order(g: CommutationGraph, syllables: Iterable[Syllable], reverse: bool = False):
    """Syllables available at the front of a fully reduced word (or the back)."""
    seq = list(syllables)
    if reverse:
        seq.reverse()
    avail = []
    seen: list[int] = []
    for k, (v, e) in enumerate(seq):
        if all(g.adjacent(u, v) for u in seen):
            avail.append(k)
        seen.append(v)
    return seq, avail


def normal_form(w: GroupWord) -> GroupWord:
    g = w.graph
    remaining = list(fully_reduce(w).syllables)
    out = []
    while remaining:
        _, avail = _greedy_order(g, remaining)
        k = max(avail, key=lambda i: remaining[i])
        out.append(remaining.pop(k))
    return GroupWord(g, tuple(out))


def is_identity(w: GroupWord) -> bool:
    return not fully_reduce(w).syllables


def equal(a: GroupWord, b: GroupWord) -> bool:
    return is_identity(a * b.inverse())


def init_set(w: GroupWord) -> frozenset[int]:
    seq, avail = _greedy_order(w.graph, fully_reduce(w).syllables)
    return frozenset(seq[k][0] for k in avail)


def term_set(w: GroupWord) -> frozenset[int]:
    seq, avail = _greedy_order(w.graph, fully_reduce(w).syllables, reverse=True)
    return frozenset(seq[k][0] for k in avail)


STRATEGIES = ("leftmost", "rightmost", "random", "nearest", "farthest")


def reduce_randomly(
    w: GroupWord,
    rng: random.Random,
    strategy: str = "random",
    swap_rate: float = 0.3,
    tail_swaps: int = 5,
) -> tuple[GroupWord, list[int]]:
    """Fully reduce ``w`` by a randomized sequence of the three moves.

    ``strategy`` picks which mergeable pair to bring together; whether the
    right syllable travels left or the left one travels right is random, and
    random swaps are interleaved at rate ``swap_rate``. Once fully reduced,
    ``tail_swaps`` further random swaps are applied. Returns the final word
    and the syllable count of every fully reduced form visited.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    g = w.graph
    syl = [list(s) for s in w.syllables]
    counts: list[int] = []

    def random_swap():
        spots = [
            i for i in range(len(syl) - 1)
            if syl[i][0] != syl[i + 1][0] and g.adjacent(syl[i][0], syl[i + 1][0])
        ]
        if spots:
            i = rng.choice(spots)
            syl[i], syl[i + 1] = syl[i + 1], syl[i]

    while True:
        pairs = _mergeable_pairs(g, syl)
        if not pairs:
            break
        if rng.random() < swap_rate:
            random_swap()
            continue
        if strategy == "leftmost":
            i, j = pairs[0]
        elif strategy == "rightmost":
            i, j = pairs[-1]
        elif strategy == "nearest":
            i, j = min(pairs, key=lambda p: (p[1] - p[0], rng.random()))
        elif strategy == "farthest":
            i, j = max(pairs, key=lambda p: (p[1] - p[0], rng.random()))
        else:
            i, j = rng.choice(pairs)
        if rng.random() < 0.5:
            for k in range(j, i + 1, -1):
                syl[k - 1], syl[k] = syl[k], syl[k - 1]
            j = i + 1
        else:
            for k in range(i, j - 1):
                syl[k], syl[k + 1] = syl[k + 1], syl[k]
            i = j - 1
        syl[i][1] += syl[j][1]
        del syl[j]
        if syl[i][1] == 0:
            del syl[i]

    counts.append(len(syl))
    for _ in range(tail_swaps):
        random_swap()
        assert not _mergeable_pairs(g, syl)
        counts.append(len(syl))
    return GroupWord(g, tuple((v, e) for v, e in syl)), counts


def random_word(
    g: CommutationGraph, rng: random.Random, max_syllables: int = 12, max_exp: int = 3
) -> GroupWord:
    n = rng.randint(0, max_syllables)
    syl = []
    for _ in range(n):
        e = rng.choice([k for k in range(-max_exp, max_exp + 1) if k])
        syl.append((rng.randrange(g.r), e))
    return GroupWord(g, tuple(syl))
