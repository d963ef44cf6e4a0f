"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class RankMismatch(DomainError):
    """Two operands live in groups of different rank (or modulus)."""


class ParseError(DomainError):
    """A textual payload could not be parsed."""


class NotConjugateToGenerator(DomainError):
    """Some image is not a conjugate of a positive generator."""


class NotPermutation(DomainError):
    """The generator classes hit by a tuple of images do not form a permutation."""


class ProductLawViolated(DomainError):
    """The product of the images differs from the product of the generators."""


class NoReducingGenerator(DomainError):
    """Norm descent got stuck on a non-identity automorphism."""


class PositiveInput(DomainError):
    """A sigma_1-positive braid was handed to an operation that forbids it."""


class IdentityInput(DomainError):
    """The identity was handed to an operation that needs a non-trivial braid."""


class EmptyPeriod(DomainError):
    """An end was requested with an empty periodic part."""


class NotInSubgroup(DomainError):
    """An element could not be written in the requested subgroup basis."""


class NotPlanar(DomainError):
    """A word that was required to be planar is not."""


class InvalidTuple(DomainError):
    """A tuple of torsion words is not the image tuple of a braid."""
