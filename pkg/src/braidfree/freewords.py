"""
Reduced words in the free group <t_1, ..., t_n>.

A letter is a non-zero integer: ``+i`` stands for t_i and ``-i`` for its
inverse.  A ``FreeWord`` is an immutable reduced tuple of letters together
with the rank n of the ambient free group.  All arithmetic is done by a
single stack scan, so multiplication and inversion are linear in the input.

Conjugation follows the exponent convention a^g = g^-1 a g, so that
(a^g)^h = a^(gh).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError, RankMismatch

Letters = tuple[int, ...]


def reduce_letters(raw: Iterable[int]) -> Letters:
    """Freely reduce a sequence of signed letters."""
    out: list[int] = []
    for a in raw:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def inverse_letters(w: Sequence[int]) -> Letters:
    return tuple(-a for a in reversed(w))


def mul_letters(a: Sequence[int], b: Sequence[int]) -> Letters:
    """Product of two reduced letter tuples (only the seam can cancel)."""
    i, la, lb = 0, len(a), len(b)
    while i < la and i < lb and a[la - 1 - i] == -b[i]:
        i += 1
    return tuple(a[: la - i]) + tuple(b[i:])


def is_reduced(w: Sequence[int]) -> bool:
    return all(w[k] != -w[k + 1] for k in range(len(w) - 1))


@dataclass(frozen=True, slots=True)
class FreeWord:
    """A reduced word of the free group of rank ``rank``."""

    rank: int
    letters: Letters

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise DomainError(f"rank must be non-negative, got {self.rank}")
        for a in self.letters:
            if a == 0 or abs(a) > self.rank:
                raise DomainError(f"letter {a} outside [1..{self.rank}]")
        if not is_reduced(self.letters):
            raise DomainError(f"letters {self.letters} are not freely reduced")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, k):
        return self.letters[k]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return multiply(self, other)

    def __invert__(self) -> FreeWord:
        return invert(self)

    def __pow__(self, k: int) -> FreeWord:
        base = self if k >= 0 else invert(self)
        out = identity(self.rank)
        for _ in range(abs(k)):
            out = multiply(out, base)
        return out

    def conj(self, g: FreeWord) -> FreeWord:
        """Return self^g = g^-1 self g."""
        return conjugate(self, g)

    def __str__(self) -> str:
        return format_word(self)


def _check_rank(*words: FreeWord) -> int:
    ranks = {w.rank for w in words}
    if len(ranks) != 1:
        raise RankMismatch(f"words of different ranks: {sorted(ranks)}")
    return ranks.pop()


def _trusted(rank: int, letters: Letters) -> FreeWord:
    """Build a FreeWord from letters already known to be reduced and in range."""
    w = object.__new__(FreeWord)
    object.__setattr__(w, "rank", rank)
    object.__setattr__(w, "letters", letters)
    return w


def identity(n: int) -> FreeWord:
    return _trusted(n, ())


def generator(i: int, n: int, sign: int = 1) -> FreeWord:
    """The word t_i (sign +1) or its inverse (sign -1)."""
    if not 1 <= i <= n:
        raise DomainError(f"generator index {i} outside [1..{n}]")
    return _trusted(n, (i if sign > 0 else -i,))


def reduce(raw: Iterable[int], n: int) -> FreeWord:
    """Free reduction of an arbitrary letter sequence over rank ``n``."""
    raw = tuple(raw)
    for a in raw:
        if a == 0 or abs(a) > n:
            raise DomainError(f"letter {a} outside [1..{n}]")
    return _trusted(n, reduce_letters(raw))


def multiply(a: FreeWord, b: FreeWord) -> FreeWord:
    n = _check_rank(a, b)
    return _trusted(n, mul_letters(a.letters, b.letters))


def product(words: Iterable[FreeWord], n: int) -> FreeWord:
    out: Letters = ()
    for w in words:
        if w.rank != n:
            raise RankMismatch(f"word of rank {w.rank} in a product of rank {n}")
        out = mul_letters(out, w.letters)
    return _trusted(n, out)


def invert(a: FreeWord) -> FreeWord:
    return _trusted(a.rank, inverse_letters(a.letters))


def conjugate(a: FreeWord, g: FreeWord) -> FreeWord:
    """a^g = g^-1 a g."""
    n = _check_rank(a, g)
    return _trusted(n, mul_letters(mul_letters(inverse_letters(g.letters), a.letters), g.letters))


def cyclic_reduce(w: FreeWord) -> tuple[FreeWord, FreeWord]:
    """
    Split ``w`` as core^conjugator with a cyclically reduced core.

    The conjugator is read off the tail of ``w``: if w = c^-1 core c then the
    returned conjugator is c.
    """
    letters = w.letters
    k = 0
    while 2 * k + 1 < len(letters) and letters[k] == -letters[-1 - k]:
        k += 1
    core = letters[k: len(letters) - k]
    conj = letters[len(letters) - k:]
    return _trusted(w.rank, core), _trusted(w.rank, conj)


def begins_with(w: FreeWord, p: FreeWord) -> bool:
    _check_rank(w, p)
    return w.letters[: len(p.letters)] == p.letters


def ends_with(w: FreeWord, p: FreeWord) -> bool:
    _check_rank(w, p)
    if not p.letters:
        return True
    return w.letters[-len(p.letters):] == p.letters


def is_squarefree(w: FreeWord | Sequence[int]) -> bool:
    """True when no two consecutive letters are equal."""
    letters = w.letters if isinstance(w, FreeWord) else w
    return all(letters[k] != letters[k + 1] for k in range(len(letters) - 1))


def z1(n: int) -> FreeWord:
    """The word t_n^-1 ... t_1^-1 (the boundary element)."""
    if n < 1:
        raise DomainError("z1 needs n >= 1")
    return _trusted(n, tuple(-i for i in range(n, 0, -1)))


def prod_t(lo: int, hi: int, n: int) -> FreeWord:
    """t_lo t_(lo+1) ... t_hi (empty when lo > hi)."""
    return _trusted(n, tuple(range(lo, hi + 1)))


# ----------------------------------------------------------------------
# Text format: whitespace separated signed integers, "e" for the empty word.


def parse_letters(text: str) -> Letters:
    text = text.strip()
    if text in ("", "e"):
        return ()
    out = []
    for tok in text.replace(",", " ").split():
        try:
            a = int(tok)
        except ValueError:
            raise ParseError(f"bad letter token {tok!r}") from None
        if a == 0:
            raise ParseError("letter 0 is not allowed")
        out.append(a)
    return tuple(out)


def parse_word(text: str, n: int) -> FreeWord:
    """Parse a word and freely reduce it."""
    return reduce(parse_letters(text), n)


def format_letters(letters: Sequence[int]) -> str:
    return " ".join(str(a) for a in letters) if letters else "e"


def format_word(w: FreeWord) -> str:
    return format_letters(w.letters)


def pretty(w: FreeWord | Sequence[int], symbol: str = "t") -> str:
    """Human readable rendering, e.g. ``t1 T2`` for t_1 t_2^-1."""
    letters = w.letters if isinstance(w, FreeWord) else w
    if not letters:
        return "1"
    return " ".join(f"{symbol}{a}" if a > 0 else f"{symbol.upper()}{-a}" for a in letters)
