"""
The sigma_1-trichotomy and the sigma right-ordering of braids.

A braid phi is classified from the single word t_1^phi:

* t_1^phi = t_1                       -> NEUTRAL
* t_1^phi begins with t_1, and is not t_1 -> NEGATIVE
* otherwise                               -> POSITIVE

Comparison of braids x, y looks at rho = x y^-1: after skipping the
generators it fixes, rho is positive exactly when the image of the first
moved generator t_i does not begin with t_i.
"""

from __future__ import annotations

from enum import Enum

from .braids import BraidAutomorphism, BraidWord, _descend, automorphism_of
from .errors import IdentityInput, PositiveInput, RankMismatch


class Trichotomy(Enum):
    NEUTRAL = "NEUTRAL"
    NEGATIVE = "NEGATIVE"
    POSITIVE = "POSITIVE"

    def mirror(self) -> Trichotomy:
        return {
            Trichotomy.NEUTRAL: Trichotomy.NEUTRAL,
            Trichotomy.NEGATIVE: Trichotomy.POSITIVE,
            Trichotomy.POSITIVE: Trichotomy.NEGATIVE,
        }[self]


class Order(Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"

    @classmethod
    def of(cls, sign: int) -> Order:
        return cls.LT if sign < 0 else cls.GT if sign > 0 else cls.EQ

    @property
    def sign(self) -> int:
        return {Order.LT: -1, Order.EQ: 0, Order.GT: 1}[self]


def _as_automorphism(a: BraidAutomorphism | BraidWord) -> BraidAutomorphism:
    return automorphism_of(a) if isinstance(a, BraidWord) else a


def classify_sigma1(a: BraidAutomorphism | BraidWord) -> Trichotomy:
    a = _as_automorphism(a)
    image = a.image_letters[0]
    if image == (1,):
        return Trichotomy.NEUTRAL
    if image[:1] == (1,):
        return Trichotomy.NEGATIVE
    return Trichotomy.POSITIVE


def sigma1_nonpositive_form(b: BraidWord | BraidAutomorphism) -> BraidWord:
    """
    Rewrite a sigma_1-negative or sigma_1-neutral braid as a word in
    sigma_2..sigma_(n-1) and the inverses of sigma_1..sigma_(n-1).

    The word is produced by norm descent in which sigma_1^-1 is never used as
    a prefix, so the output contains sigma_1 only with exponent -1.
    """
    a = _as_automorphism(b)
    if classify_sigma1(a) is Trichotomy.POSITIVE:
        raise PositiveInput("the braid is sigma_1-positive")
    return BraidWord(a.rank, tuple(_descend(a.image_letters, allow_inverse_at_1=False)))


def main_index(a: BraidAutomorphism | BraidWord) -> int:
    """The index of the first generator moved by ``a``."""
    a = _as_automorphism(a)
    for k, image in enumerate(a.image_letters):
        if image != (k + 1,):
            return k + 1
    raise IdentityInput("the identity has no main index")


def sign_of(a: BraidAutomorphism | BraidWord) -> int:
    """+1 if sigma-positive, -1 if sigma-negative, 0 for the identity."""
    a = _as_automorphism(a)
    for k, image in enumerate(a.image_letters):
        if image != (k + 1,):
            return -1 if image[0] == k + 1 else 1
    return 0


def compare(x: BraidWord, y: BraidWord) -> Order:
    """Sigma comparison: x < y iff x y^-1 is sigma-negative."""
    if x.strands != y.strands:
        raise RankMismatch(f"braids on {x.strands} and {y.strands} strands")
    return Order.of(sign_of(x * ~y))
