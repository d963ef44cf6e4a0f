"""
Identity suites verified as exact automorphism equalities.

Each check compares two braid words (or two semidirect-product elements)
through the automorphisms they induce, which decides equality in B_n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .braids import (
    BraidWord,
    SemidirectElement,
    apply_gen,
    automorphism_of,
    semidirect_conjugate,
    semidirect_identity,
    semidirect_inverse,
)
from .errors import DomainError
from .freewords import _trusted, generator


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    ok: bool


@dataclass
class Report:
    checks: list[IdentityCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.ok]

    def add(self, name: str, ok: bool) -> None:
        self.checks.append(IdentityCheck(name, bool(ok)))

    def extend(self, other: Report) -> None:
        self.checks.extend(other.checks)


def braids_equal(x: BraidWord, y: BraidWord) -> bool:
    return automorphism_of(x) == automorphism_of(y)


def check_identities(pairs: Iterable[tuple[str, BraidWord, BraidWord]]) -> Report:
    """Check a list of named braid identities lhs = rhs."""
    report = Report()
    for name, lhs, rhs in pairs:
        report.add(name, braids_equal(lhs, rhs))
    return report


def artin_relations(n: int) -> list[tuple[str, BraidWord, BraidWord]]:
    """The far-commutation and braid relations of B_n."""
    out = []
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append((f"s{i} s{j} = s{j} s{i}", BraidWord(n, (i, j)), BraidWord(n, (j, i))))
    for i in range(1, n - 1):
        out.append(
            (f"s{i} s{i+1} s{i} = s{i+1} s{i} s{i+1}", BraidWord(n, (i, i + 1, i)), BraidWord(n, (i + 1, i, i + 1)))
        )
    return out


def conj_word(a: tuple[int, ...], g: tuple[int, ...], n: int) -> BraidWord:
    """The braid word g^-1 a g."""
    inv_g = tuple(-f for f in reversed(g))
    return BraidWord(n, inv_g + a + g)


def power_conjugacy_identities(n: int) -> list[tuple[str, BraidWord, BraidWord]]:
    """
    a_n^(a_(n-1)^-1 ... a_i^-1) = a_i^(a_(i+1) ... a_n) in B_(n+1), for i in [1..n].
    """
    strands = n + 1
    out = []
    for i in range(1, n + 1):
        lhs = conj_word((n,), tuple(-j for j in range(n - 1, i - 1, -1)), strands)
        rhs = conj_word((i,), tuple(range(i + 1, n + 1)), strands)
        out.append((f"a{n}^(A{n-1}..A{i}) = a{i}^(a{i+1}..a{n})", lhs, rhs))
    return out


def check_relations(n: int, extra: Iterable[tuple[str, BraidWord, BraidWord]] = ()) -> Report:
    """Braid relations of B_n, the conjugacy identities in B_(n+1) and the stabilizer checks."""
    if n < 2:
        raise DomainError("check_relations needs n >= 2")
    report = check_identities(artin_relations(n))
    report.extend(check_identities(power_conjugacy_identities(n)))
    report.extend(check_embedding(n))
    report.extend(check_identities(extra))
    return report


# ----------------------------------------------------------------------
# The embedding of B_n x| F_n into B_(n+1)


def embedding_image(k: int, n: int) -> BraidWord:
    """(sigma_k^-2)^(sigma_(k+1) ... sigma_n) in B_(n+1), the image of t_k."""
    return conj_word((-k, -k), tuple(range(k + 1, n + 1)), n + 1)


def check_embedding(n: int) -> Report:
    """
    The braids (sigma_i^-2)^(sigma_(i+1)..sigma_n) fix the class of t_(n+1),
    as do sigma_1..sigma_(n-1) and sigma_n^2; and t_k -> those braids,
    sigma_i -> sigma_i respects the action of B_n on F_n.
    """
    report = Report()
    strands = n + 1
    images = {k: embedding_image(k, n) for k in range(1, n + 1)}
    for k, b in images.items():
        report.add(f"image of t{k} fixes [t{strands}]", automorphism_of(b).perm[n] == strands)
    for i in range(1, n):
        report.add(f"s{i} fixes [t{strands}]", automorphism_of(BraidWord(strands, (i,))).perm[n] == strands)
    report.add(f"s{n}^2 fixes [t{strands}]", automorphism_of(BraidWord(strands, (n, n))).perm[n] == strands)

    for i in range(1, n):
        s = (i,)
        for k in range(1, n + 1):
            lhs = conj_word(images[k].factors, s, strands)
            moved = apply_gen(generator(k, n), i, 1)
            factors: list[int] = []
            for a in moved.letters:
                f = images[abs(a)]
                factors.extend(f.factors if a > 0 else (~f).factors)
            rhs = BraidWord(strands, tuple(factors))
            report.add(f"image(t{k})^s{i} = image(t{k}^s{i})", braids_equal(lhs, rhs))
    return report


# ----------------------------------------------------------------------
# Generators b_1..b_n of the semidirect product and the elements frak_t_k


def semidirect_generators(n: int) -> dict[int, SemidirectElement]:
    """b_i = (sigma_i, 1) for i < n and b_n = (1, t_n^-1)."""
    gens = {i: SemidirectElement(BraidWord(n, (i,)), _trusted(n, ())) for i in range(1, n)}
    gens[n] = SemidirectElement(BraidWord(n, ()), generator(n, n, -1))
    return gens


def frak_t(k: int, n: int) -> SemidirectElement:
    """(b_n^-1)^(b_(n-1)^-1 ... b_k^-1)."""
    b = semidirect_generators(n)
    g = semidirect_identity(n)
    for j in range(n - 1, k - 1, -1):
        g = g * semidirect_inverse(b[j])
    return semidirect_conjugate(semidirect_inverse(b[n]), g)


def check_semidirect_identities(n: int) -> Report:
    """
    In B_n x| F_n: frak_t_k = (1, t_k); conjugating by b_i^-1 acts on the
    frak_t as sigma_i^-1 acts on the t; and the type-B relations hold for b.
    """
    report = Report()
    b = semidirect_generators(n)
    ts = {k: frak_t(k, n) for k in range(1, n + 1)}
    for k, t in ts.items():
        report.add(f"frak_t{k} = t{k}", t.equals(SemidirectElement(BraidWord(n, ()), generator(k, n))))
    for i in range(1, n):
        bi_inv = semidirect_inverse(b[i])
        for k in range(1, n + 1):
            lhs = semidirect_conjugate(ts[k], bi_inv)
            if k == i + 1:
                rhs = ts[i]
            elif k == i:
                rhs = semidirect_conjugate(ts[i + 1], semidirect_inverse(ts[i]))
            else:
                rhs = ts[k]
            report.add(f"frak_t{k}^B{i} = frak_t{k}^S{i}", lhs.equals(rhs))
    for m in range(1, n):
        report.add(
            f"frak_t{m+1}^B{m} = frak_t{m}",
            semidirect_conjugate(ts[m + 1], semidirect_inverse(b[m])).equals(ts[m]),
        )
    for i in range(1, n):
        for j in range(i + 2, n + 1):
            report.add(f"b{i} b{j} = b{j} b{i}", (b[i] * b[j]).equals(b[j] * b[i]))
    for i in range(1, n - 1):
        report.add(
            f"b{i} b{i+1} b{i} = b{i+1} b{i} b{i+1}",
            (b[i] * b[i + 1] * b[i]).equals(b[i + 1] * b[i] * b[i + 1]),
        )
    if n >= 2:
        x, y = b[n - 1], b[n]
        report.add(f"b{n-1} b{n} b{n-1} b{n} = b{n} b{n-1} b{n} b{n-1}", (x * y * x * y).equals(y * x * y * x))
    return report
