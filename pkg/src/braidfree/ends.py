"""
Eventually periodic ends of the free group and their ordering.

An end is the reduced right-infinite word u v v v ...; it is stored in a
canonical form (shortest prefix, primitive cyclically reduced period) so
that structural equality is equality of ends.

Two distinct ends are ordered at their first disagreement.  The candidates
for the next letter are ranked by the cyclic order

    t_1 < t_1^-1 < t_2 < t_2^-1 < ... < t_n < t_n^-1,

started at t_i^-1 when the common prefix ends in t_i^-1, started just after
t_i (so that t_i comes last) when it ends in t_i, and started at t_1 for the
empty prefix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .braids import BraidAutomorphism, BraidWord, Endomorphism, automorphism_of, substitute
from .dehornoy import Order
from .errors import EmptyPeriod, ParseError, RankMismatch
from .freewords import (
    FreeWord,
    Letters,
    _trusted,
    cyclic_reduce,
    format_letters,
    inverse_letters,
    mul_letters,
    parse_letters,
    reduce_letters,
)


def _primitive_root(v: Letters) -> Letters:
    L = len(v)
    for d in range(1, L + 1):
        if L % d == 0 and v[:d] * (L // d) == v:
            return v[:d]
    return v


@dataclass(frozen=True, slots=True)
class End:
    """The end prefix . period^infinity, kept in canonical form."""

    rank: int
    prefix: Letters
    period: Letters

    def letter(self, k: int) -> int:
        p = self.prefix
        if k < len(p):
            return p[k]
        return self.period[(k - len(p)) % len(self.period)]

    def letters(self) -> Iterator[int]:
        k = 0
        while True:
            yield self.letter(k)
            k += 1

    def truncate(self, length: int) -> Letters:
        return tuple(self.letter(k) for k in range(length))

    def __str__(self) -> str:
        return format_end(self)


def make_end(u: FreeWord | Sequence[int], v: FreeWord | Sequence[int], n: int | None = None) -> End:
    """Canonical form of the end u v^infinity."""
    if isinstance(u, FreeWord):
        n = u.rank if n is None else n
        u = u.letters
    if isinstance(v, FreeWord):
        if n is not None and v.rank != n:
            raise RankMismatch("prefix and period of different ranks")
        n = v.rank if n is None else n
        v = v.letters
    if n is None:
        raise RankMismatch("rank of the end is unknown")
    prefix = reduce_letters(u)
    period = reduce_letters(v)
    if not period:
        raise EmptyPeriod("an end needs a non-trivial period")
    core, conj = cyclic_reduce(_trusted(n, period))
    prefix = mul_letters(prefix, inverse_letters(conj.letters))
    period = core.letters
    while prefix and prefix[-1] == -period[0]:
        prefix = prefix[:-1]
        period = period[1:] + period[:1]
    while prefix and prefix[-1] == period[-1]:
        prefix = prefix[:-1]
        period = period[-1:] + period[:-1]
    root = _primitive_root(period)
    return End(n, prefix, root)


def power_end(w: FreeWord) -> End:
    """w^infinity."""
    return make_end((), w.letters, w.rank)


def generator_end(i: int, n: int, sign: int = 1) -> End:
    return make_end((), (i if sign > 0 else -i,), n)


def min_end(n: int) -> End:
    """(t_1 ... t_n)^infinity, the smallest end."""
    return make_end((), tuple(range(1, n + 1)), n)


def max_end(n: int) -> End:
    """(t_n^-1 ... t_1^-1)^infinity, the largest end."""
    return make_end((), tuple(-i for i in range(n, 0, -1)), n)


def letter_rank(a: int, n: int) -> int:
    """Position of a letter in t_1 < t_1^-1 < ... < t_n < t_n^-1 (0-based)."""
    return 2 * (abs(a) - 1) + (0 if a > 0 else 1)


def next_letter_rank(prev: int | None, a: int, n: int) -> int:
    """Rank of the letter ``a`` among the continuations of a word ending in ``prev``."""
    r = letter_rank(a, n)
    if prev is None:
        return r
    if prev < 0:
        start = letter_rank(prev, n)
    else:
        start = letter_rank(prev, n) + 2
    return (r - start) % (2 * n)


def agreement_bound(e1: End, e2: End) -> int:
    """Agreement on this many letters implies the two ends are equal."""
    return max(len(e1.prefix), len(e2.prefix)) + math.lcm(len(e1.period), len(e2.period))


def compare_ends(e1: End, e2: End) -> Order:
    if e1.rank != e2.rank:
        raise RankMismatch(f"ends of ranks {e1.rank} and {e2.rank}")
    n = e1.rank
    prev = None
    for k in range(agreement_bound(e1, e2)):
        a, b = e1.letter(k), e2.letter(k)
        if a != b:
            ra, rb = next_letter_rank(prev, a, n), next_letter_rank(prev, b, n)
            return Order.LT if ra < rb else Order.GT
        prev = a
    return Order.EQ


def end_is_squarefree(e: End) -> bool:
    seq = e.prefix + e.period + e.period
    return all(seq[k] != seq[k + 1] for k in range(len(seq) - 1))


def act_on_end(e: End, b: BraidWord | BraidAutomorphism | Endomorphism) -> End:
    """The image of an end under a braid (limit of the images of its finite prefixes)."""
    a = automorphism_of(b) if isinstance(b, BraidWord) else b
    if a.rank != e.rank:
        raise RankMismatch(f"end of rank {e.rank} acted on by an automorphism of rank {a.rank}")
    images = a.image_letters
    u = substitute(e.prefix, images)
    g = substitute(e.period, images)
    core, conj = cyclic_reduce(_trusted(e.rank, g))
    return make_end(mul_letters(u, inverse_letters(conj.letters)), core.letters, e.rank)


def word_times_end(w: FreeWord, e: End) -> End:
    """The end w . e (left multiplication, with cancellation)."""
    if w.rank != e.rank:
        raise RankMismatch("word and end of different ranks")
    return make_end(mul_letters(w.letters, e.prefix), e.period, e.rank)


def thurston_tuple(b: BraidWord) -> tuple[End, ...]:
    a = automorphism_of(b)
    return tuple(act_on_end(generator_end(i, b.strands), a) for i in range(1, b.strands + 1))


def thurston_compare(x: BraidWord, y: BraidWord) -> Order:
    """Lexicographic comparison of ((t_i^infinity)^x)_i and ((t_i^infinity)^y)_i."""
    if x.strands != y.strands:
        raise RankMismatch(f"braids on {x.strands} and {y.strands} strands")
    for ex, ey in zip(thurston_tuple(x), thurston_tuple(y)):
        c = compare_ends(ex, ey)
        if c is not Order.EQ:
            return c
    return Order.EQ


# ----------------------------------------------------------------------
# Text format "u | v"


def parse_end(text: str, n: int) -> End:
    if "|" not in text:
        raise ParseError(f"an end is written 'u | v', got {text!r}")
    left, right = text.split("|", 1)
    u, v = parse_letters(left), parse_letters(right)
    for a in u + v:
        if abs(a) > n:
            raise ParseError(f"letter {a} outside [1..{n}]")
    return make_end(u, v, n)


def format_end(e: End) -> str:
    return f"{format_letters(e.prefix)} | {format_letters(e.period)}"
