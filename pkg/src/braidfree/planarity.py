"""
Planar words and the braid orbit of t_1.

The alphabet is ordered z_1^-1 < t_1 < t_1^-1 < ... < t_n < t_n^-1 < z_1 and
encoded by integer ranks 0 .. 2n+1.  A reduced word a_1 ... a_m has the
expansion (z_1^-1, a_1, a_1^-1, ..., a_m, a_m^-1, z_1); it is planar when the
labels can be laid out in ascending order on a line so that the arcs joining
consecutive entries (alternately above and below the line, starting above)
form one crossing-free curve.

Below the line only the pairs (a_i, a_i^-1) are joined.  Those arcs always
run between the block of t_j and the neighbouring block of t_j^-1, so they
are forced into concentric rainbows.  Above the line, a reduced word never
joins two points of one block, and the number of arcs between any two
blocks is read off the expansion; non-crossing then leaves a single
candidate matching.  Deciding planarity is therefore a linear-time
construction followed by a crossing check and a trace of the curve.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .braids import BraidWord, apply_braid
from .errors import DomainError, NotPlanar
from .freewords import FreeWord, Letters, _trusted, cyclic_reduce, prod_t

LabelRank = int


def label_rank(a: int) -> LabelRank:
    """Rank of the letter t_|a|^sign(a) in the ordered alphabet."""
    return 2 * abs(a) - (1 if a > 0 else 0)


def label_name(r: LabelRank, n: int) -> str:
    if r == 0:
        return "z1^-1"
    if r == 2 * n + 1:
        return "z1"
    i = (r + 1) // 2
    return f"t{i}" if r % 2 else f"t{i}^-1"


def whitehead_expansion(w: FreeWord) -> tuple[LabelRank, ...]:
    out = [0]
    for a in w.letters:
        out += [label_rank(a), label_rank(-a)]
    out.append(2 * w.rank + 1)
    return tuple(out)


@dataclass(frozen=True, slots=True)
class PlanarEmbedding:
    """
    Positions are 1-based.  ``perm[k]`` is the position of the (k+1)-th entry
    of the expansion; arcs are stored as (from, to) along the traced curve.
    """

    rank: int
    points: tuple[tuple[int, LabelRank], ...]
    upper_arcs: tuple[tuple[int, int], ...]
    lower_arcs: tuple[tuple[int, int], ...]
    perm: tuple[int, ...]


def _crosses(a: tuple[int, int], b: tuple[int, int]) -> bool:
    p, q = sorted(a)
    r, s = sorted(b)
    return (p < r < q) != (p < s < q)


def is_nested(pairs: Sequence[tuple[int, int]]) -> bool:
    """Pairwise nested: all endpoints distinct and no two pairs interleave."""
    ends = [x for p in pairs for x in p]
    if len(set(ends)) != len(ends):
        return False
    return not any(_crosses(a, b) for a, b in itertools.combinations(pairs, 2))


def embeds(labels: Sequence[LabelRank], perm: Sequence[int]) -> bool:
    """
    Does ``perm`` (1-based; entry k goes to position perm[k]) lay the tuple
    out in ascending order with both arc families nested?
    """
    size = len(labels)
    if sorted(perm) != list(range(1, size + 1)) or size % 2:
        return False
    placed = [0] * size
    for k, pos in enumerate(perm):
        placed[pos - 1] = labels[k]
    if any(placed[k] > placed[k + 1] for k in range(size - 1)):
        return False
    upper = [(perm[2 * i], perm[2 * i + 1]) for i in range(size // 2)]
    lower = [(perm[2 * i + 1], perm[2 * i + 2]) for i in range(size // 2 - 1)]
    return is_nested(upper) and is_nested(lower)


def _embedding(n: int, labels: Sequence[LabelRank], perm: Sequence[int]) -> PlanarEmbedding:
    size = len(labels)
    points = [0] * size
    for k, pos in enumerate(perm):
        points[pos - 1] = labels[k]
    return PlanarEmbedding(
        rank=n,
        points=tuple((k + 1, points[k]) for k in range(size)),
        upper_arcs=tuple((perm[2 * i], perm[2 * i + 1]) for i in range(size // 2)),
        lower_arcs=tuple((perm[2 * i + 1], perm[2 * i + 2]) for i in range(size // 2 - 1)),
        perm=tuple(perm),
    )


def _layout(labels: Sequence[LabelRank]) -> dict[LabelRank, int]:
    """First position (0-based) of every label block in the ascending layout."""
    counts = Counter(labels)
    start, pos = {}, 0
    for lab in sorted(counts):
        start[lab] = pos
        pos += counts[lab]
    return start


def _upper_matching(labels: Sequence[LabelRank], start: dict[LabelRank, int]) -> list[int] | None:
    """
    The only candidate for the upper arcs, as a partner table on positions.

    The expansion fixes how many upper arcs join each pair of blocks.  If no
    arc stays inside a block, non-crossing forces every block to list its
    leftward arcs first (nearest target block first) and then its rightward
    arcs (farthest target first), and arcs between two blocks to be nested.
    """
    pairs = Counter()
    for i in range(0, len(labels), 2):
        x, y = labels[i], labels[i + 1]
        if x == y:
            return None
        pairs[(min(x, y), max(x, y))] += 1
    targets: dict[LabelRank, Counter] = {lab: Counter() for lab in start}
    for (x, y), c in pairs.items():
        targets[x][y] += c
        targets[y][x] += c
    slots: dict[tuple[LabelRank, LabelRank], list[int]] = {}
    for x in start:
        pos = start[x]
        left = sorted((y for y in targets[x] if y < x), reverse=True)
        right = sorted((y for y in targets[x] if y > x), reverse=True)
        for y in left + right:
            c = targets[x][y]
            slots[(x, y)] = list(range(pos, pos + c))
            pos += c
    partner = [-1] * len(labels)
    for (x, y) in pairs:
        here, there = slots[(x, y)], slots[(y, x)]
        for p, q in zip(here, reversed(there)):
            partner[p], partner[q] = q, p
    return partner


def _non_crossing(partner: Sequence[int]) -> bool:
    stack: list[int] = []
    for p, q in enumerate(partner):
        if q > p:
            stack.append(p)
        elif not stack or stack.pop() != q:
            return False
    return not stack


def _lower_matching(n: int, start: dict[LabelRank, int], size: int) -> list[int]:
    """The lower arcs: a rainbow between the blocks of t_j and t_j^-1."""
    partner = [-1] * size
    for j in range(1, n + 1):
        if 2 * j not in start:
            continue
        mid = start[2 * j]
        for level in range(mid - start[2 * j - 1]):
            partner[mid - 1 - level], partner[mid + level] = mid + level, mid - 1 - level
    return partner


def planar_layout(labels: Sequence[LabelRank], n: int) -> list[int] | None:
    """A 1-based embedding permutation for an expansion tuple, or None."""
    size = len(labels)
    start = _layout(labels)
    upper = _upper_matching(labels, start)
    if upper is None or not _non_crossing(upper):
        return None
    lower = _lower_matching(n, start, size)
    placed = sorted(labels)
    perm, pos = [], 0
    for k in range(size):
        if pos < 0 or placed[pos] != labels[k]:
            return None
        perm.append(pos + 1)
        if k < size - 1:
            pos = upper[pos] if k % 2 == 0 else lower[pos]
    return perm


def is_planar(w: FreeWord) -> PlanarEmbedding | None:
    """An embedding of the expansion of ``w`` if one exists, else None."""
    labels = whitehead_expansion(w)
    perm = planar_layout(labels, w.rank)
    if perm is None:
        return None
    return _embedding(w.rank, labels, perm)


def planar(w: FreeWord) -> bool:
    return is_planar(w) is not None


ORACLE_MAX_LENGTH = 6


def planar_tuple_oracle(labels: Sequence[LabelRank]) -> list[int] | None:
    """
    Exhaustive search over every assignment of the entries with a given label
    to the slots of that label's block in the ascending layout.  Branches are
    cut as soon as two completed arcs of the same family interleave; the
    surviving assignment is re-checked with ``embeds``.
    """
    size = len(labels)
    if size % 2:
        return None
    order = sorted(range(size), key=lambda k: labels[k])
    block_of: dict[LabelRank, list[int]] = {}
    for pos, k in enumerate(order):
        block_of.setdefault(labels[k], []).append(pos + 1)
    upper = [k + 1 if k % 2 == 0 else k - 1 for k in range(size)]
    lower = [None] + [k + 1 if k % 2 else k - 1 for k in range(1, size - 1)] + [None]
    perm = [0] * size
    free = {lab: set(slots) for lab, slots in block_of.items()}
    arcs: tuple[list[tuple[int, int]], list[tuple[int, int]]] = ([], [])

    def place(idx: int) -> bool:
        if idx == size:
            return embeds(labels, perm)
        k = order[idx]
        lab = labels[k]
        for slot in sorted(free[lab]):
            perm[k] = slot
            free[lab].discard(slot)
            added = []
            ok = True
            for fam, partner in ((0, upper[k]), (1, lower[k])):
                if partner is not None and perm[partner]:
                    arc = (slot, perm[partner])
                    if any(_crosses(arc, other) for other in arcs[fam]):
                        ok = False
                        break
                    arcs[fam].append(arc)
                    added.append(fam)
            if ok and place(idx + 1):
                return True
            for fam in added:
                arcs[fam].pop()
            free[lab].add(slot)
            perm[k] = 0
        return False

    return list(perm) if place(0) else None


def planar_oracle(w: FreeWord) -> bool:
    if len(w) > ORACLE_MAX_LENGTH:
        raise DomainError(f"the oracle handles words of length at most {ORACLE_MAX_LENGTH}")
    return planar_tuple_oracle(whitehead_expansion(w)) is not None


def oracle_work(w: FreeWord) -> int:
    """Number of permutations the oracle may examine."""
    counts = Counter(whitehead_expansion(w))
    return math.prod(math.factorial(c) for c in counts.values())


# ----------------------------------------------------------------------
# Diagram


def emit_diagram(emb: PlanarEmbedding, scale: int = 40) -> str:
    """A deterministic SVG picture of the embedding."""
    size = len(emb.points)
    width = scale * (size + 1)
    half = scale * (size // 2 + 1)
    height = 2 * half
    axis = half
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<line x1="0" y1="{axis}" x2="{width}" y2="{axis}" stroke="#bbb" stroke-width="1"/>',
    ]

    def arc(p: int, q: int, upper: bool, cls: str) -> str:
        x1, x2 = scale * p, scale * q
        r = abs(x2 - x1) // 2
        sweep = (1 if x2 > x1 else 0) if upper else (0 if x2 > x1 else 1)
        return (
            f'<path class="{cls}" d="M {x1} {axis} A {r} {r} 0 0 {sweep} {x2} {axis}" '
            f'fill="none" stroke="black" stroke-width="2"/>'
        )

    for p, q in emb.upper_arcs:
        lines.append(arc(p, q, True, "upper"))
    for p, q in emb.lower_arcs:
        lines.append(arc(p, q, False, "lower"))
    for pos, lab in emb.points:
        x = scale * pos
        lines.append(f'<circle class="point" cx="{x}" cy="{axis}" r="3" fill="black"/>')
        lines.append(
            f'<text x="{x}" y="{axis + 16}" font-size="11" text-anchor="middle">'
            f"{label_name(lab, emb.rank)}</text>"
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# Orbit reduction


def _prefix_depth(w: Letters) -> int:
    """The largest i with w beginning t_1 t_2 ... t_i."""
    i = 0
    while i < len(w) and w[i] == i + 1:
        i += 1
    return i


def orbit_reduce(w: FreeWord) -> tuple[int, BraidWord]:
    """
    A pair (k, phi) with w^phi = t_1 ... t_k.

    Each step looks at the longest prefix t_1 ... t_i of the current word and
    at the letter x = t_j^(+-1) that follows it: for j < i it applies
    sigma_j ... sigma_(i-1), for j > i+1 it applies sigma_(j-1)^-1 ... sigma_(i+1)^-1.
    """
    if not planar(w):
        raise NotPlanar("the word is not planar")
    n = w.rank
    cur = w
    factors: list[int] = []
    while True:
        letters = cur.letters
        i = _prefix_depth(letters)
        if i == len(letters):
            return i, BraidWord(n, tuple(factors))
        j = abs(letters[i])
        if j <= i - 1:
            step = tuple(range(j, i))
        elif j >= i + 2:
            step = tuple(-s for s in range(j - 1, i, -1))
        else:
            raise NotPlanar(f"letter {letters[i]} after t_1 ... t_{i} cannot occur in a planar word")
        cur = apply_braid(cur, BraidWord(n, step))
        factors.extend(step)


def t1_orbit_witness(w: FreeWord) -> BraidWord | None:
    """A braid taking ``w`` to t_1, or None when ``w`` is not in the orbit of t_1."""
    try:
        k, phi = orbit_reduce(w)
    except NotPlanar:
        return None
    return phi if k == 1 else None


def orbit_criterion(w: FreeWord) -> bool:
    """Cyclic core a single positive generator, and planar."""
    core, _ = cyclic_reduce(w)
    return len(core) == 1 and core.letters[0] > 0 and planar(w)


def _shift_down(w: FreeWord) -> FreeWord:
    return _trusted(w.rank - 1, tuple(a - 1 if a > 0 else a + 1 for a in w.letters))


def tuple_orbit_witness(ws: Sequence[FreeWord]) -> BraidWord | None:
    """A braid taking (w_1, ..., w_k) to (t_1, ..., t_k), or None."""
    if not ws:
        raise DomainError("need at least one word")
    n = ws[0].rank
    if len(ws) > n or any(w.rank != n for w in ws):
        raise DomainError(f"need between 1 and {n} words of rank {n}")
    phi = t1_orbit_witness(ws[0])
    if phi is None:
        return None
    rest = [apply_braid(w, phi) for w in ws[1:]]
    if not rest:
        return phi
    if any(abs(a) == 1 for w in rest for a in w.letters):
        return None
    if n == 1:
        return None
    inner = tuple_orbit_witness([_shift_down(w) for w in rest])
    if inner is None:
        return None
    lifted = tuple(f + 1 if f > 0 else f - 1 for f in inner.factors)
    return BraidWord(n, phi.factors + lifted)


def representative(k: int, n: int) -> FreeWord:
    """t_1 t_2 ... t_k."""
    return prod_t(1, k, n)


def orbit_clause_failures(w: FreeWord) -> list[str]:
    """
    Which of the necessary conditions for lying in the orbit of t_1 fail:
    squarefree; no prefix t_n^-1 ... t_(k+1)^-1 t_k except the word
    t_k^(t_(k+1) ... t_n) itself; no prefix t_1 ... t_(k-1) t_k^-1.
    """
    n = w.rank
    letters = w.letters
    out = []
    if any(letters[i] == letters[i + 1] for i in range(len(letters) - 1)):
        out.append("squarefree")
    for k in range(1, n + 1):
        head = tuple(-j for j in range(n, k, -1)) + (k,)
        exempt = head + tuple(range(k + 1, n + 1))
        if letters[: len(head)] == head and letters != exempt:
            out.append(f"prefix t_n^-1 ... t_{k + 1}^-1 t_{k}")
        head = tuple(range(1, k)) + (-k,)
        if letters[: len(head)] == head:
            out.append(f"prefix t_1 ... t_{k - 1} t_{k}^-1")
    return out
