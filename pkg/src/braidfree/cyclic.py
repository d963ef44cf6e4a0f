"""
Free products of cyclic groups C_m * ... * C_m and the braid action on them.

A ``TorsionWord`` is the free-product normal form: a tuple of syllables
(generator, exponent) with exponents in [1..m-1] and no two neighbouring
syllables on the same generator.  Braids act through the same substitution
tables as on the free group, with tau_i in place of t_i.

The module also houses the index-two subgroup Phi_n of C_2^*(n+1) (even
syllable count), four free bases of it, the induced actions on those bases,
and the genus-g surface identification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .braids import BraidWord, Endomorphism, apply_gen_letters, substitute
from .errors import (
    DomainError,
    InvalidTuple,
    NoReducingGenerator,
    NotInSubgroup,
    ParseError,
    RankMismatch,
)
from .folding import SubgroupGraph
from .freewords import FreeWord, Letters, _trusted, inverse_letters, mul_letters, reduce_letters
from .relations import Report

Syllables = tuple[tuple[int, int], ...]


def normalize(raw: Iterable[tuple[int, int]], m: int) -> Syllables:
    """Free-product normal form of a sequence of (generator, exponent) pairs."""
    out: list[tuple[int, int]] = []
    for g, e in raw:
        e %= m
        if e == 0:
            continue
        if out and out[-1][0] == g:
            e2 = (out[-1][1] + e) % m
            out.pop()
            if e2:
                out.append((g, e2))
        else:
            out.append((g, e))
    return tuple(out)


def inverse_syllables(s: Sequence[tuple[int, int]], m: int) -> Syllables:
    return tuple((g, m - e) for g, e in reversed(s))


def mul_syllables(a: Sequence[tuple[int, int]], b: Sequence[tuple[int, int]], m: int) -> Syllables:
    """Product of two normal forms; only the seam needs work."""
    a, b = list(a), list(b)
    while a and b and a[-1][0] == b[0][0]:
        g = a[-1][0]
        e = (a.pop()[1] + b.pop(0)[1]) % m
        if e:
            a.append((g, e))
            break
    return tuple(a) + tuple(b)


@dataclass(frozen=True, slots=True)
class TorsionWord:
    """Normal form of an element of C_m^*n."""

    m: int
    rank: int
    syllables: Syllables

    def __post_init__(self) -> None:
        if self.m < 2:
            raise DomainError(f"modulus must be at least 2, got {self.m}")
        prev = None
        for g, e in self.syllables:
            if not 1 <= g <= self.rank:
                raise DomainError(f"generator {g} outside [1..{self.rank}]")
            if not 1 <= e <= self.m - 1:
                raise DomainError(f"exponent {e} outside [1..{self.m - 1}]")
            if g == prev:
                raise DomainError("neighbouring syllables on the same generator")
            prev = g

    def __len__(self) -> int:
        return tw_length(self)

    def __mul__(self, other: TorsionWord) -> TorsionWord:
        return tw_multiply(self, other)

    def __invert__(self) -> TorsionWord:
        return tw_invert(self)

    def __str__(self) -> str:
        return format_torsion(self)


def _tw(m: int, n: int, s: Syllables) -> TorsionWord:
    w = object.__new__(TorsionWord)
    object.__setattr__(w, "m", m)
    object.__setattr__(w, "rank", n)
    object.__setattr__(w, "syllables", s)
    return w


def torsion_word(m: int, n: int, raw: Iterable[tuple[int, int]]) -> TorsionWord:
    raw = tuple(raw)
    for g, _ in raw:
        if not 1 <= g <= n:
            raise DomainError(f"generator {g} outside [1..{n}]")
    return _tw(m, n, normalize(raw, m))


def tau(i: int, m: int, n: int, e: int = 1) -> TorsionWord:
    return torsion_word(m, n, [(i, e)])


def tau_product(indices: Iterable[int], m: int, n: int) -> TorsionWord:
    """tau_(i_1) tau_(i_2) ... for a sequence of indices."""
    return torsion_word(m, n, [(i, 1) for i in indices])


def _check(a: TorsionWord, b: TorsionWord) -> None:
    if a.m != b.m or a.rank != b.rank:
        raise RankMismatch(f"C_{a.m}^*{a.rank} and C_{b.m}^*{b.rank}")


def tw_multiply(a: TorsionWord, b: TorsionWord) -> TorsionWord:
    _check(a, b)
    return _tw(a.m, a.rank, mul_syllables(a.syllables, b.syllables, a.m))


def tw_invert(a: TorsionWord) -> TorsionWord:
    return _tw(a.m, a.rank, inverse_syllables(a.syllables, a.m))


def tw_conjugate(a: TorsionWord, g: TorsionWord) -> TorsionWord:
    """a^g = g^-1 a g."""
    return tw_multiply(tw_multiply(tw_invert(g), a), g)


def syllable_length(e: int, m: int) -> int:
    """|tau^e|: 2k for the representative k in [0..m/2], else -2k-1 for k in [-(m-1)/2..-1]."""
    e %= m
    if e <= m // 2:
        return 2 * e
    return -2 * (e - m) - 1


def tw_length(w: TorsionWord | Syllables, m: int | None = None) -> int:
    if isinstance(w, TorsionWord):
        m, s = w.m, w.syllables
    else:
        s = w
    return sum(syllable_length(e, m) for _, e in s)


def project(w: FreeWord, m: int) -> TorsionWord:
    """The image of a free word under t_i -> tau_i."""
    return _tw(m, w.rank, normalize(((abs(a), 1 if a > 0 else -1) for a in w.letters), m))


# ----------------------------------------------------------------------
# Braid action


def _letters_of(s: Syllables, m: int) -> list[int]:
    """Expand a normal form into letters +g (one per unit of exponent)."""
    out: list[int] = []
    for g, e in s:
        out.extend([g] * e)
    return out


def substitute_syllables(s: Syllables, images: Sequence[Syllables], m: int) -> Syllables:
    """Replace tau_g by images[g-1] in a normal form."""
    out: Syllables = ()
    for g, e in s:
        piece: Syllables = ()
        for _ in range(e):
            piece = mul_syllables(piece, images[g - 1], m)
        out = mul_syllables(out, piece, m)
    return out


def _gen_images(n: int, i: int, sign: int, m: int) -> list[Syllables]:
    ims = []
    for k in range(1, n + 1):
        letters = apply_gen_letters((k,), i, sign)
        ims.append(normalize(((abs(a), 1 if a > 0 else -1) for a in letters), m))
    return ims


def tw_apply_braid(w: TorsionWord, b: BraidWord) -> TorsionWord:
    if w.rank != b.strands:
        raise RankMismatch(f"torsion word of rank {w.rank} under a braid on {b.strands} strands")
    s = w.syllables
    for f in b.factors:
        s = substitute_syllables(s, _gen_images(w.rank, abs(f), f, w.m), w.m)
    return _tw(w.m, w.rank, s)


def tw_images(b: BraidWord, m: int) -> tuple[TorsionWord, ...]:
    """The images of tau_1..tau_n under ``b``."""
    return tuple(tw_apply_braid(tau(k, m, b.strands), b) for k in range(1, b.strands + 1))


# ----------------------------------------------------------------------
# Recovering a braid from torsion images


def _split(s: Syllables, m: int) -> tuple[int, Syllables] | None:
    """Write a normal form as w^-1 tau_j w, returning (j, w)."""
    L = len(s)
    if L % 2 == 0:
        return None
    h = L // 2
    g, e = s[h]
    if e != 1:
        return None
    for k in range(h):
        (g1, e1), (g2, e2) = s[k], s[L - 1 - k]
        if g1 != g2 or (e1 + e2) % m != 0:
            return None
    return g, tuple(s[h + 1:])


def _decompose_torsion(images: Sequence[Syllables], m: int) -> tuple[list[int], list[Syllables]]:
    perm, ws = [], []
    for k, s in enumerate(images):
        sp = _split(s, m)
        if sp is None:
            raise InvalidTuple(f"image of tau_{k + 1} is not a conjugate of a generator")
        perm.append(sp[0])
        ws.append(sp[1])
    if sorted(perm) != list(range(1, len(images) + 1)):
        raise InvalidTuple("the images do not permute the generator classes")
    return perm, ws


def torsion_norm(images: Sequence[Syllables], m: int) -> int:
    """n + 2 sum |w_i| for the decomposition of the image tuple."""
    _, ws = _decompose_torsion(images, m)
    return len(images) + 2 * sum(tw_length(w, m) for w in ws)


def _prefix(images: Sequence[Syllables], i: int, sign: int, m: int) -> list[Syllables]:
    out = list(images)
    a, b = images[i - 1], images[i]
    if sign > 0:
        out[i - 1] = b
        out[i] = mul_syllables(mul_syllables(inverse_syllables(b, m), a, m), b, m)
    else:
        out[i - 1] = mul_syllables(mul_syllables(a, b, m), inverse_syllables(a, m), m)
        out[i] = a
    return out


def tw_recover_braid(images: Sequence[TorsionWord]) -> BraidWord:
    """A braid word inducing the given images of tau_1..tau_n."""
    if not images:
        raise InvalidTuple("empty image tuple")
    m, n = images[0].m, images[0].rank
    if len(images) != n or any(w.m != m or w.rank != n for w in images):
        raise InvalidTuple(f"expected {n} images in C_{m}^*{n}")
    prod: Syllables = ()
    for w in images:
        prod = mul_syllables(prod, w.syllables, m)
    if prod != tuple((k, 1) for k in range(1, n + 1)):
        raise InvalidTuple("the product of the images is not tau_1 ... tau_n")
    state = [w.syllables for w in images]
    identity = [((k, 1),) for k in range(1, n + 1)]
    out: list[int] = []
    while state != identity:
        perm, ws = _decompose_torsion(state, m)
        w = [()] + ws + [()]
        u = [mul_syllables(w[i], inverse_syllables(w[i + 1], m), m) for i in range(n + 1)]
        move = None
        for i in range(1, n + 1):
            p = perm[i - 1]
            tail = u[i - 1][-1] if u[i - 1] else None
            head = u[i][0] if u[i] else None
            a_i = tail[1] if tail and tail[0] == p else 0
            b_i = head[1] if head and head[0] == p else 0
            if i >= 2 and m // 2 <= a_i <= m - 1:
                move = (i - 1, 1)
                break
            if i <= n - 1 and (m + 1) // 2 <= b_i <= m - 1:
                move = (i, -1)
                break
        if move is None:
            raise NoReducingGenerator("no generator shortens these images; they do not come from a braid")
        before = torsion_norm(state, m)
        state = _prefix(state, move[0], move[1], m)
        if torsion_norm(state, m) >= before:
            raise NoReducingGenerator("norm descent failed to shorten the images")
        out.append(-move[1] * move[0])
    return BraidWord(n, tuple(out))


# ----------------------------------------------------------------------
# Text format "i^e i^e ..."


def parse_torsion(text: str, m: int, n: int) -> TorsionWord:
    text = text.strip()
    if text in ("", "e"):
        return _tw(m, n, ())
    raw = []
    for tok in text.split():
        g, _, e = tok.partition("^")
        try:
            gi, ei = int(g), int(e) if e else 1
        except ValueError:
            raise ParseError(f"bad syllable {tok!r}") from None
        if not 1 <= gi <= n:
            raise ParseError(f"generator {gi} outside [1..{n}]")
        raw.append((gi, ei))
    return _tw(m, n, normalize(raw, m))


def format_torsion(w: TorsionWord) -> str:
    return " ".join(f"{g}^{e}" for g, e in w.syllables) if w.syllables else "e"


# ----------------------------------------------------------------------
# The subgroup Phi_n of C_2^*(n+1) and its bases


def is_phi_element(w: TorsionWord) -> bool:
    return w.m == 2 and len(w.syllables) % 2 == 0


@dataclass(frozen=True, slots=True)
class PhiElement:
    """An element of Phi_n: a C_2^*(n+1) word with an even number of syllables."""

    underlying: TorsionWord

    def __post_init__(self) -> None:
        if not is_phi_element(self.underlying):
            raise DomainError("not an element of Phi_n (needs m = 2 and an even number of syllables)")

    @property
    def n(self) -> int:
        return self.underlying.rank - 1

    @property
    def parity(self) -> int:
        return len(self.underlying.syllables) % 2

    def __mul__(self, other: PhiElement) -> PhiElement:
        return PhiElement(tw_multiply(self.underlying, other.underlying))

    def __invert__(self) -> PhiElement:
        return PhiElement(tw_invert(self.underlying))

    def __str__(self) -> str:
        return format_torsion(self.underlying)


def _unwrap(g: PhiElement | TorsionWord) -> TorsionWord:
    return g.underlying if isinstance(g, PhiElement) else g


def phi_element(w: PhiElement | TorsionWord) -> PhiElement:
    return w if isinstance(w, PhiElement) else PhiElement(w)


def parse_phi(text: str, n: int) -> PhiElement:
    """A Phi_n element in the torsion text format (m = 2, rank n+1)."""
    return PhiElement(parse_torsion(text, 2, n + 1))


def phi_basis(variant: int, n: int) -> tuple[PhiElement, ...]:
    """
    Four free bases of Phi_n, indexed 1..4:

    1. x_k = tau_k tau_(k+1)
    2. x_k = tau_(n+1) tau_k
    3. x_k = tau_(n+1)^(tau_1 ... tau_(k-1)) tau_k
    4. x_k = (tau_(n+1)^(tau_n ... tau_1) tau_k)^(tau_k ... tau_(n+1))
    """
    if n < 1:
        raise DomainError("Phi_n needs n >= 1")
    return tuple(PhiElement(x) for x in _phi_basis_words(variant, n))


def _phi_basis_words(variant: int, n: int) -> tuple[TorsionWord, ...]:
    r = n + 1
    T = lambda *idx: tau_product(idx, 2, r)  # noqa: E731
    if variant == 1:
        return tuple(T(k, k + 1) for k in range(1, n + 1))
    if variant == 2:
        return tuple(T(r, k) for k in range(1, n + 1))
    if variant == 3:
        return tuple(
            tw_multiply(tw_conjugate(T(r), T(*range(1, k))), T(k)) for k in range(1, n + 1)
        )
    if variant == 4:
        out = []
        for k in range(1, n + 1):
            inner = tw_multiply(tw_conjugate(T(r), T(*range(n, 0, -1))), T(k))
            out.append(tw_conjugate(inner, T(*range(k, r + 1))))
        return tuple(out)
    raise DomainError(f"unknown basis variant {variant}")


def phi_coordinates(g: PhiElement | TorsionWord) -> Letters:
    """
    g as a word in the variant-2 basis y_k = tau_(n+1) tau_k.

    Pairs of syllables tau_a tau_b become y_a^-1 y_b, reading y_(n+1) as 1.
    """
    g = phi_element(g).underlying
    r = g.rank
    raw: list[int] = []
    gens = [s[0] for s in g.syllables]
    for q in range(0, len(gens), 2):
        a, b = gens[q], gens[q + 1]
        if a != r:
            raw.append(-a)
        if b != r:
            raw.append(b)
    return reduce_letters(raw)


def from_phi_coordinates(y: Sequence[int], n: int) -> TorsionWord:
    r = n + 1
    raw = []
    for a in y:
        raw.extend([(r, 1), (a, 1)] if a > 0 else [(-a, 1), (r, 1)])
    return _tw(2, r, normalize(raw, 2))


def expand_in_basis(xw: Sequence[int], basis: Sequence[PhiElement | TorsionWord]) -> TorsionWord:
    """The element of Phi_n spelled by a word in the basis symbols."""
    basis = [_unwrap(b) for b in basis]
    b0 = basis[0]
    out: Syllables = ()
    for a in xw:
        piece = basis[abs(a) - 1].syllables
        out = mul_syllables(out, piece if a > 0 else inverse_syllables(piece, 2), 2)
    return _tw(b0.m, b0.rank, out)


def rewrite_in_basis(g: PhiElement | TorsionWord, basis: Sequence[PhiElement | TorsionWord]) -> FreeWord:
    """Write an element of Phi_n as a word in the given basis (via subgroup folding)."""
    g = _unwrap(g)
    basis = [_unwrap(b) for b in basis]
    n = len(basis)
    for b in basis:
        if b.rank != n + 1 or b.m != 2:
            raise RankMismatch("basis elements must lie in C_2^*(n+1)")
    if g.rank != n + 1 or g.m != 2:
        raise RankMismatch("element must lie in C_2^*(n+1)")
    if not is_phi_element(g):
        raise NotInSubgroup("odd syllable count: not in Phi_n")
    graph = SubgroupGraph([phi_coordinates(b) for b in basis])
    return _trusted(n, graph.express(phi_coordinates(g)))


def wada_action(xw: FreeWord, b: BraidWord, variant: int, m: int = 2) -> FreeWord:
    """
    The action of a braid on a word in the x-basis.

    Variants 2..4 route through Phi_n (b has n+1 strands); variant 1 is the
    direct action x_i -> x_(i+1), x_(i+1) -> x_i^(x_(i+1)^m) (b has n strands).
    """
    n = xw.rank
    if variant == 1:
        if b.strands != n:
            raise RankMismatch(f"variant 1 needs a braid on {n} strands")
        letters = xw.letters
        for f in b.factors:
            letters = substitute(letters, wada1_images(n, abs(f), 1 if f > 0 else -1, m))
        return _trusted(n, letters)
    if variant not in (2, 3, 4):
        raise DomainError(f"unknown variant {variant}")
    if b.strands != n + 1:
        raise RankMismatch(f"variants 2-4 need a braid on {n + 1} strands")
    basis = phi_basis(variant, n)
    g = expand_in_basis(xw.letters, basis)
    return rewrite_in_basis(tw_apply_braid(g, b), basis)


def wada1_images(n: int, i: int, sign: int, m: int) -> list[Letters]:
    """Images of x_1..x_n under sigma_i^sign in the first variant action."""
    if m == 0:
        raise DomainError("the first variant action needs a non-zero m")
    ims: list[Letters] = [(k,) for k in range(1, n + 1)]
    j = i + 1
    power = lambda a: (a,) * m if m > 0 else (-a,) * -m  # noqa: E731
    pw = power(j)
    if sign > 0:
        ims[i - 1] = (j,)
        ims[j - 1] = mul_letters(mul_letters(inverse_letters(pw), (i,)), pw)
    else:
        pi = power(i)
        ims[i - 1] = mul_letters(mul_letters(pi, (j,)), inverse_letters(pi))
        ims[j - 1] = (i,)
    return ims


def wada_table(variant: int, n: int, i: int) -> list[Letters]:
    """
    Closed-form images of x_1..x_n under sigma_i (i in [1..n]) for variants 2..4,
    as words in the x's.  For variant 2 the sigma_n row is x_k -> x_n x_k.
    """
    x = lambda k: (k,)  # noqa: E731
    X = lambda k: (-k,)  # noqa: E731
    cat = lambda *ws: reduce_letters([a for w in ws for a in w])  # noqa: E731
    ims: list[Letters] = [(k,) for k in range(1, n + 1)]
    if variant == 2:
        if i < n:
            ims[i - 1] = x(i + 1)
            ims[i] = cat(x(i + 1), X(i), x(i + 1))
        else:
            for k in range(1, n):
                ims[k - 1] = cat(x(n), x(k))
        return ims
    if variant in (3, 4):
        if i < n:
            if variant == 3:
                ims[i - 1] = cat(x(i), x(i), x(i + 1))
                ims[i] = cat(X(i + 1), X(i), x(i + 1))
            else:
                ims[i - 1] = cat(x(i), X(i + 1), X(i))
                ims[i] = cat(x(i), x(i + 1), x(i + 1))
            return ims
        w = cat(*[x(k) + x(k) for k in range(1, n)], x(n))
        if variant == 3:
            w = inverse_letters(w)
        for k in range(1, n + 1):
            g = cat(*[x(j) for j in range(1, k)])
            wk = w if k % 2 == 0 else inverse_letters(w)
            conj = cat(inverse_letters(g), wk, g)
            ims[k - 1] = cat(conj, x(k), w) if k == n else cat(conj, x(k))
        return ims
    raise DomainError(f"no closed-form table for variant {variant}")


# ----------------------------------------------------------------------
# The genus-g surface: x_k, y_k in Phi_2g


def surface_identification(g: int) -> list[TorsionWord]:
    """[x_1, y_1, ..., x_g, y_g] as elements of C_2^*(2g+1)."""
    r = 2 * g + 1
    out = []
    for k in range(1, g + 1):
        out.append(tau_product((2 * k + 1, 2 * k), 2, r))
        out.append(tau_product((2 * k + 1, *range(1, 2 * k + 2)), 2, r))
    return out


def _sx(k: int) -> int:
    return 2 * k - 1


def _sy(k: int) -> int:
    return 2 * k


def _surface_cat(*parts: Sequence[int]) -> Letters:
    return reduce_letters([a for p in parts for a in p])


def surface_twist(kind: str, i: int, g: int) -> Endomorphism:
    """The twists alpha_i, beta_i, gamma_i on F(x_1, y_1, ..., x_g, y_g)."""
    n = 2 * g
    ims: list[Letters] = [(k,) for k in range(1, n + 1)]
    x, y = _sx, _sy
    if kind == "alpha":
        ims[x(i) - 1] = (-y(i), x(i))
    elif kind == "beta":
        ims[y(i) - 1] = (x(i), y(i))
    elif kind == "gamma":
        xi1, yi1, xi, yi = x(i + 1), y(i + 1), x(i), y(i)
        y1_conj = (-xi1, yi1, xi1)
        y1_conj_inv = (-xi1, -yi1, xi1)
        ims[xi - 1] = _surface_cat(y1_conj, (-yi, xi))
        ims[yi - 1] = _surface_cat(inverse_letters(y1_conj_inv), (yi,), y1_conj_inv)
        ims[xi1 - 1] = _surface_cat((xi1, yi), y1_conj_inv)
    else:
        raise DomainError(f"unknown twist {kind!r}")
    return Endomorphism(n, tuple(_trusted(n, im) for im in ims))


def surface_correspondence(g: int) -> list[tuple[int, str, int]]:
    """sigma_1 -> alpha_1, sigma_2k -> beta_k, sigma_(2k+1) -> gamma_k."""
    out = [(1, "alpha", 1)]
    for k in range(1, g + 1):
        out.append((2 * k, "beta", k))
        if k < g:
            out.append((2 * k + 1, "gamma", k))
    return out


def surface_check(g: int, override: Callable[[str, int, int], Endomorphism] | None = None) -> Report:
    """Verify the commutator identity and that each twist matches its braid generator."""
    if g < 1:
        raise DomainError("surface_check needs g >= 1")
    make = override or surface_twist
    r = 2 * g + 1
    ident = surface_identification(g)
    report = Report()

    def image(word: Sequence[int]) -> TorsionWord:
        return expand_in_basis(word, ident)

    comm: list[int] = []
    for k in range(1, g + 1):
        comm.extend([-_sx(k), -_sy(k), _sx(k), _sy(k)])
    rhs = tau_product(list(range(1, r + 1)) * 2, 2, r)
    report.add("prod [x_k, y_k] = (tau_1 ... tau_(2g+1))^2", image(comm) == rhs)
    for j, kind, i in surface_correspondence(g):
        twist = make(kind, i, g)
        s = BraidWord(r, (j,))
        for k in range(1, 2 * g + 1):
            name = ("x" if k % 2 else "y") + str((k + 1) // 2)
            lhs = image(twist.images[k - 1].letters)
            rhs = tw_apply_braid(image((k,)), s)
            report.add(f"{name}^{kind}_{i} = {name}^s{j}", lhs == rhs)
    return report
