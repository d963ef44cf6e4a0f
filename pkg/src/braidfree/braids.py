"""
Braid words and their right action on the free group.

The standard generator sigma_i acts by

    t_i     -> t_(i+1)
    t_(i+1) -> t_(i+1)^-1 t_i t_(i+1)

and fixes every other generator; its inverse acts by t_i -> t_i t_(i+1) t_i^-1,
t_(i+1) -> t_i.  Actions are on the right, so a braid word is applied letter
by letter from left to right and w^(xy) = (w^x)^y.

A braid is identified with the automorphism it induces.  ``BraidAutomorphism``
stores the images of the generators together with the decomposition
t_i^phi = w_i^-1 t_(i pi) w_i used by the norm-descent algorithms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DomainError,
    NoReducingGenerator,
    NotConjugateToGenerator,
    NotPermutation,
    ParseError,
    ProductLawViolated,
    RankMismatch,
)
from .freewords import (
    FreeWord,
    Letters,
    _trusted,
    inverse_letters,
    mul_letters,
    parse_letters,
)

# ----------------------------------------------------------------------
# Braid words


@dataclass(frozen=True, slots=True)
class BraidWord:
    """A word in sigma_1..sigma_(n-1); factor +i is sigma_i, -i its inverse."""

    strands: int
    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise DomainError(f"a braid needs at least one strand, got {self.strands}")
        for f in self.factors:
            if f == 0 or abs(f) > self.strands - 1:
                raise DomainError(f"generator {f} outside [1..{self.strands - 1}]")

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise RankMismatch(f"braids on {self.strands} and {other.strands} strands")
        return BraidWord(self.strands, self.factors + other.factors)

    def __invert__(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-f for f in reversed(self.factors)))

    def pairs(self) -> list[tuple[int, int]]:
        """The factors as (index, sign) pairs."""
        return [(abs(f), 1 if f > 0 else -1) for f in self.factors]

    def __str__(self) -> str:
        return format_braid(self)


def braid(n: int, *factors: int) -> BraidWord:
    return BraidWord(n, tuple(factors))


def parse_braid(text: str, n: int) -> BraidWord:
    try:
        return BraidWord(n, parse_letters(text))
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def format_braid(b: BraidWord) -> str:
    return " ".join(str(f) for f in b.factors) if b.factors else "e"


def random_braid(rng: random.Random, n: int, length: int) -> BraidWord:
    """A uniformly random (not necessarily reduced) braid word of the given length."""
    if n < 2:
        return BraidWord(n, ())
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


# ----------------------------------------------------------------------
# Action of a single generator


def _gen_table(i: int, sign: int) -> dict[int, Letters]:
    j = i + 1
    if sign > 0:
        return {i: (j,), -i: (-j,), j: (-j, i, j), -j: (-j, -i, j)}
    return {i: (i, j, -i), -i: (i, -j, -i), j: (i,), -j: (-i,)}


def _substitute_table(letters: Iterable[int], table: dict[int, Letters]) -> Letters:
    out: list[int] = []
    for a in letters:
        for b in table.get(a, (a,)):
            if out and out[-1] == -b:
                out.pop()
            else:
                out.append(b)
    return tuple(out)


def apply_gen_letters(letters: Sequence[int], i: int, sign: int) -> Letters:
    return _substitute_table(letters, _gen_table(i, sign))


def apply_gen(w: FreeWord, i: int, sign: int = 1) -> FreeWord:
    """The image of ``w`` under sigma_i (sign +1) or its inverse (sign -1)."""
    if not 1 <= i <= w.rank - 1:
        raise DomainError(f"generator index {i} outside [1..{w.rank - 1}]")
    return _trusted(w.rank, apply_gen_letters(w.letters, i, sign))


def apply_braid(w: FreeWord, b: BraidWord) -> FreeWord:
    """w^b, applying the factors of ``b`` from left to right."""
    if w.rank != b.strands:
        raise RankMismatch(f"word of rank {w.rank} acted on by a braid on {b.strands} strands")
    letters = w.letters
    for f in b.factors:
        letters = _substitute_table(letters, _gen_table(abs(f), f))
    return _trusted(w.rank, letters)


# ----------------------------------------------------------------------
# Endomorphisms given by generator images


def substitute(letters: Iterable[int], images: Sequence[Letters]) -> Letters:
    """Replace t_k by images[k-1] (and t_k^-1 by its inverse), then reduce."""
    inv = [inverse_letters(im) for im in images]
    out: list[int] = []
    for a in letters:
        piece = images[a - 1] if a > 0 else inv[-a - 1]
        for b in piece:
            if out and out[-1] == -b:
                out.pop()
            else:
                out.append(b)
    return tuple(out)


@dataclass(frozen=True)
class Endomorphism:
    """An endomorphism of the free group given by the images of t_1..t_n."""

    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.rank:
            raise DomainError(f"expected {self.rank} images, got {len(self.images)}")
        for w in self.images:
            if w.rank != self.rank:
                raise RankMismatch(f"image of rank {w.rank} in an endomorphism of rank {self.rank}")

    @cached_property
    def image_letters(self) -> tuple[Letters, ...]:
        return tuple(w.letters for w in self.images)

    def apply(self, w: FreeWord) -> FreeWord:
        if w.rank != self.rank:
            raise RankMismatch(f"word of rank {w.rank} under an endomorphism of rank {self.rank}")
        return _trusted(self.rank, substitute(w.letters, self.image_letters))

    def then(self, other: Endomorphism) -> Endomorphism:
        """The composite 'self, then other' (right action convention)."""
        if other.rank != self.rank:
            raise RankMismatch("endomorphisms of different ranks")
        ims = other.image_letters
        return Endomorphism(self.rank, tuple(_trusted(self.rank, substitute(w, ims)) for w in self.image_letters))

    def is_identity(self) -> bool:
        return all(w.letters == (k + 1,) for k, w in enumerate(self.images))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.rank == other.rank and self.image_letters == other.image_letters

    def __hash__(self) -> int:
        return hash((self.rank, self.image_letters))


def endomorphism(n: int, images: Sequence[Sequence[int]]) -> Endomorphism:
    return Endomorphism(n, tuple(FreeWord(n, tuple(im)) for im in images))


def identity_endomorphism(n: int) -> Endomorphism:
    return Endomorphism(n, tuple(_trusted(n, (k,)) for k in range(1, n + 1)))


def braid_endomorphism(b: BraidWord) -> Endomorphism:
    n = b.strands
    ims = []
    for k in range(1, n + 1):
        letters: Letters = (k,)
        for f in b.factors:
            letters = _substitute_table(letters, _gen_table(abs(f), f))
        ims.append(_trusted(n, letters))
    return Endomorphism(n, tuple(ims))


# ----------------------------------------------------------------------
# Braid automorphisms and their decomposition


def split_conjugate(letters: Sequence[int]) -> tuple[int, Letters] | None:
    """
    Write a reduced word as w^-1 t_j w with j > 0.

    Returns (j, w) or None when the word is not a conjugate of a positive
    generator.  Reducedness forces w to avoid beginning with t_j or t_j^-1.
    """
    L = len(letters)
    if L % 2 == 0:
        return None
    h = L // 2
    mid = letters[h]
    if mid < 0:
        return None
    for k in range(h):
        if letters[k] != -letters[L - 1 - k]:
            return None
    return mid, tuple(letters[h + 1:])


def _decompose(images: Sequence[Letters]) -> tuple[tuple[int, ...], tuple[Letters, ...]]:
    n = len(images)
    perm, ws = [], []
    for k, im in enumerate(images):
        split = split_conjugate(im)
        if split is None:
            raise NotConjugateToGenerator(f"image of t_{k + 1} is not conjugate to a positive generator")
        perm.append(split[0])
        ws.append(split[1])
    if sorted(perm) != list(range(1, n + 1)):
        raise NotPermutation(f"generator classes {perm} are not a permutation of [1..{n}]")
    return tuple(perm), tuple(ws)


@dataclass(frozen=True)
class BraidAutomorphism:
    """
    An automorphism of <t_1..t_n> induced by a braid.

    ``perm[i-1]`` is i^pi, ``conjugators[i-1]`` is w_i and ``diffs[i]`` is
    u_i = w_i w_(i+1)^-1 for i in [0..n] with w_0 = w_(n+1) = 1.
    """

    rank: int
    images: tuple[FreeWord, ...]
    perm: tuple[int, ...]
    conjugators: tuple[FreeWord, ...]

    @cached_property
    def image_letters(self) -> tuple[Letters, ...]:
        return tuple(w.letters for w in self.images)

    @cached_property
    def diffs(self) -> tuple[FreeWord, ...]:
        n = self.rank
        ws = [()] + [w.letters for w in self.conjugators] + [()]
        return tuple(_trusted(n, mul_letters(ws[i], inverse_letters(ws[i + 1]))) for i in range(n + 1))

    @property
    def endomorphism(self) -> Endomorphism:
        return Endomorphism(self.rank, self.images)

    def apply(self, w: FreeWord) -> FreeWord:
        if w.rank != self.rank:
            raise RankMismatch(f"word of rank {w.rank} under an automorphism of rank {self.rank}")
        return _trusted(self.rank, substitute(w.letters, self.image_letters))

    def is_identity(self) -> bool:
        return all(im == (k + 1,) for k, im in enumerate(self.image_letters))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (BraidAutomorphism, Endomorphism)):
            return self.rank == other.rank and self.image_letters == other.image_letters
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.rank, self.image_letters))


def _from_letters(n: int, images: Sequence[Letters], check_product: bool) -> BraidAutomorphism:
    perm, ws = _decompose(images)
    if check_product:
        prod: Letters = ()
        for im in images:
            prod = mul_letters(prod, im)
        if prod != tuple(range(1, n + 1)):
            raise ProductLawViolated("the product of the images is not t_1 t_2 ... t_n")
    return BraidAutomorphism(
        n,
        tuple(_trusted(n, tuple(im)) for im in images),
        perm,
        tuple(_trusted(n, w) for w in ws),
    )


def validate_tuple(images: Sequence[FreeWord]) -> BraidAutomorphism:
    """Check that a tuple of words is the image tuple of a braid and decompose it."""
    if not images:
        raise DomainError("an automorphism needs at least one image")
    n = images[0].rank
    if len(images) != n:
        raise DomainError(f"expected {n} images for rank {n}, got {len(images)}")
    for w in images:
        if w.rank != n:
            raise RankMismatch("images of different ranks")
    return _from_letters(n, [w.letters for w in images], check_product=True)


def automorphism_of(b: BraidWord) -> BraidAutomorphism:
    """The automorphism induced by a braid word."""
    n = b.strands
    images = []
    for k in range(1, n + 1):
        letters: Letters = (k,)
        for f in b.factors:
            letters = _substitute_table(letters, _gen_table(abs(f), f))
        images.append(letters)
    return _from_letters(n, images, check_product=False)


def identity_automorphism(n: int) -> BraidAutomorphism:
    return automorphism_of(BraidWord(n, ()))


def compose(a: BraidAutomorphism, b: BraidAutomorphism) -> BraidAutomorphism:
    """'a, then b': the automorphism t -> (t^a)^b."""
    if a.rank != b.rank:
        raise RankMismatch("automorphisms of different ranks")
    ims = b.image_letters
    return _from_letters(a.rank, [substitute(w, ims) for w in a.image_letters], check_product=False)


def norm(a: BraidAutomorphism | Endomorphism) -> int:
    """Sum of the lengths of the generator images."""
    return sum(len(w) for w in a.images)


# ----------------------------------------------------------------------
# Norm descent (recovering a braid word from an automorphism)


def prefix_gen(images: Sequence[Letters], i: int, sign: int) -> list[Letters]:
    """Images of sigma_i^sign followed by the automorphism with the given images."""
    out = list(images)
    a, b = images[i - 1], images[i]
    if sign > 0:
        out[i - 1] = b
        out[i] = mul_letters(mul_letters(inverse_letters(b), a), b)
    else:
        out[i - 1] = mul_letters(mul_letters(a, b), inverse_letters(a))
        out[i] = a
    return out


def _u_ends(wi: Letters, wj: Letters) -> tuple[int, int] | None:
    """First and last letters of wi wj^-1, or None when it is trivial."""
    li, lj = len(wi), len(wj)
    c = 0
    while c < li and c < lj and wi[li - 1 - c] == wj[lj - 1 - c]:
        c += 1
    ri, rj = li - c, lj - c
    if ri == 0 and rj == 0:
        return None
    first = wi[0] if ri > 0 else -wj[rj - 1]
    last = -wj[0] if rj > 0 else wi[ri - 1]
    return first, last


class _Descent:
    """Mutable working state for norm descent on an image tuple."""

    def __init__(self, images: Sequence[Letters]) -> None:
        self.n = len(images)
        self.images = list(images)
        self.perm: list[int] = [0] * self.n
        self.ws: list[Letters] = [()] * self.n
        for k in range(self.n):
            self._split(k)

    def _split(self, k: int) -> None:
        split = split_conjugate(self.images[k])
        if split is None:
            raise NotConjugateToGenerator(f"image of t_{k + 1} is not conjugate to a positive generator")
        self.perm[k], self.ws[k] = split

    def w(self, i: int) -> Letters:
        """w_i for i in [0..n+1]."""
        return self.ws[i - 1] if 1 <= i <= self.n else ()

    def u_ends(self, i: int) -> tuple[int, int] | None:
        return _u_ends(self.w(i), self.w(i + 1))

    def prefix(self, i: int, sign: int) -> None:
        self.images = prefix_gen(self.images, i, sign)
        self._split(i - 1)
        self._split(i)

    def is_identity(self) -> bool:
        return all(im == (k + 1,) for k, im in enumerate(self.images))

    def norm(self) -> int:
        return sum(len(im) for im in self.images)


def _descend(images: Sequence[Letters], allow_inverse_at_1: bool = True) -> list[int]:
    """
    Run norm descent and return the braid word (as signed factors) inducing ``images``.

    With ``allow_inverse_at_1`` false the sigma_1^-1 prefix is never used; this
    is the restricted descent valid when t_1^phi begins with t_1.
    """
    state = _Descent(images)
    n = state.n
    out: list[int] = []
    while not state.is_identity():
        move = None
        for i in range(1, n):
            ends = state.u_ends(i)
            if ends is None:
                continue
            first, last = ends
            if last == -state.perm[i]:
                move = (i, 1)
                break
            if first == -state.perm[i - 1] and (allow_inverse_at_1 or i >= 2):
                move = (i, -1)
                break
        if move is None:
            raise NoReducingGenerator("no generator shortens this automorphism; it is not a braid")
        i, sign = move
        before = state.norm()
        state.prefix(i, sign)
        if state.norm() > before - 2:
            raise NoReducingGenerator("norm descent failed to shorten the automorphism")
        out.append(-sign * i)
    return out


def recover_braid_word(a: BraidAutomorphism) -> BraidWord:
    """A braid word of length at most (norm - n)/2 inducing ``a``."""
    return BraidWord(a.rank, tuple(_descend(a.image_letters)))


def inverse(a: BraidAutomorphism) -> BraidAutomorphism:
    return automorphism_of(~recover_braid_word(a))


# ----------------------------------------------------------------------
# The reflections zeta and xi (not braids)


def zeta(n: int) -> Endomorphism:
    """t_k -> (t_k^-1)^(t_(k-1)^-1 ... t_1^-1)."""
    if n < 1:
        raise DomainError("zeta needs n >= 1")
    ims = []
    for k in range(1, n + 1):
        g = tuple(-j for j in range(k - 1, 0, -1))
        ims.append(_trusted(n, mul_letters(mul_letters(inverse_letters(g), (-k,)), g)))
    return Endomorphism(n, tuple(ims))


def xi(n: int) -> Endomorphism:
    """t_j -> t_(n+1-j)^-1."""
    if n < 1:
        raise DomainError("xi needs n >= 1")
    return Endomorphism(n, tuple(_trusted(n, (-(n + 1 - j),)) for j in range(1, n + 1)))


# ----------------------------------------------------------------------
# The semidirect product B_n x| F_n with (phi, u)(psi, v) = (phi psi, u^psi v)


@dataclass(frozen=True)
class SemidirectElement:
    braid: BraidWord
    word: FreeWord

    def __post_init__(self) -> None:
        if self.braid.strands != self.word.rank:
            raise RankMismatch("braid and word of different ranks")

    def __mul__(self, other: SemidirectElement) -> SemidirectElement:
        return semidirect_multiply(self, other)

    def __invert__(self) -> SemidirectElement:
        return semidirect_inverse(self)

    def key(self) -> tuple[tuple[Letters, ...], Letters]:
        """Canonical data deciding equality: the automorphism images and the word."""
        return automorphism_of(self.braid).image_letters, self.word.letters

    def equals(self, other: SemidirectElement) -> bool:
        return self.key() == other.key()


def semidirect_multiply(p: SemidirectElement, q: SemidirectElement) -> SemidirectElement:
    if p.braid.strands != q.braid.strands:
        raise RankMismatch("semidirect elements of different ranks")
    moved = apply_braid(p.word, q.braid)
    return SemidirectElement(p.braid * q.braid, moved * q.word)


def semidirect_inverse(p: SemidirectElement) -> SemidirectElement:
    inv_b = ~p.braid
    return SemidirectElement(inv_b, ~apply_braid(p.word, inv_b))


def semidirect_identity(n: int) -> SemidirectElement:
    return SemidirectElement(BraidWord(n, ()), _trusted(n, ()))


def semidirect_conjugate(a: SemidirectElement, g: SemidirectElement) -> SemidirectElement:
    """a^g = g^-1 a g in the semidirect product."""
    return semidirect_inverse(g) * a * g
