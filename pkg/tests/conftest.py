"""Shared strategies and deliberately naive reference implementations."""

from __future__ import annotations

import itertools
import random
from typing import Sequence

import pytest
from hypothesis import settings, strategies as st

from braidfree.braids import BraidWord
from braidfree.freewords import FreeWord, reduce


# The naive oracles below are quadratic; wall-clock deadlines only add noise.
settings.register_profile("braidfree", deadline=None)
settings.load_profile("braidfree")


# ----------------------------------------------------------------------
# Reference implementations, written without touching the package internals


def naive_reduce(seq: Sequence[int]) -> tuple[int, ...]:
    """Delete adjacent inverse pairs, one at a time, until none is left."""
    out = list(seq)
    changed = True
    while changed:
        changed = False
        for k in range(len(out) - 1):
            if out[k] == -out[k + 1]:
                del out[k : k + 2]
                changed = True
                break
    return tuple(out)


def _gen_image(a: int, i: int, sign: int) -> list[int]:
    """Image of the single letter ``a`` under sigma_i^sign."""
    j, s = abs(a), (1 if a > 0 else -1)
    if sign > 0:
        table = {i: [i + 1], i + 1: [-(i + 1), i, i + 1]}
    else:
        table = {i: [i, i + 1, -i], i + 1: [i]}
    word = table.get(j, [j])
    return word if s > 0 else [-x for x in reversed(word)]


def naive_act(letters: Sequence[int], factors: Sequence[int]) -> tuple[int, ...]:
    """Right action, one braid factor at a time, reducing only at the end."""
    cur = list(letters)
    for f in factors:
        cur = [y for a in cur for y in _gen_image(a, abs(f), 1 if f > 0 else -1)]
    return naive_reduce(cur)


def naive_images(factors: Sequence[int], n: int) -> list[tuple[int, ...]]:
    return [naive_act((k,), factors) for k in range(1, n + 1)]


def brute_planar(labels: Sequence[int]) -> bool:
    """Try every ascending layout of the labels; check both arc families."""
    size = len(labels)
    order = sorted(range(size), key=lambda k: labels[k])
    groups = [list(g) for _, g in itertools.groupby(order, key=lambda k: labels[k])]

    def crossing(a, b):
        p, q = sorted(a)
        r, s = sorted(b)
        return (p < r < q) != (p < s < q)

    def nested(pairs):
        return not any(crossing(a, b) for a, b in itertools.combinations(pairs, 2))

    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        pos = {}
        for k, idx in enumerate(x for g in choice for x in g):
            pos[idx] = k
        upper = [(pos[2 * i], pos[2 * i + 1]) for i in range(size // 2)]
        lower = [(pos[2 * i + 1], pos[2 * i + 2]) for i in range(size // 2 - 1)]
        if nested(upper) and nested(lower):
            return True
    return False


def all_reduced_words(n: int, max_len: int):
    letters = [a for i in range(1, n + 1) for a in (i, -i)]
    yield ()
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for a in letters:
                if w and w[-1] == -a:
                    continue
                nxt.append(w + (a,))
        yield from nxt
        frontier = nxt


# ----------------------------------------------------------------------
# Hypothesis strategies


@st.composite
def braid_words(draw, min_n: int = 2, max_n: int = 5, max_len: int = 8) -> BraidWord:
    n = draw(st.integers(min_n, max_n))
    gens = [s for i in range(1, n) for s in (i, -i)]
    factors = draw(st.lists(st.sampled_from(gens), max_size=max_len))
    return BraidWord(n, tuple(factors))


@st.composite
def free_words(draw, min_n: int = 1, max_n: int = 4, max_len: int = 10, n: int | None = None) -> FreeWord:
    rank = n if n is not None else draw(st.integers(min_n, max_n))
    letters = [a for i in range(1, rank + 1) for a in (i, -i)]
    raw = draw(st.lists(st.sampled_from(letters), max_size=max_len))
    return reduce(raw, rank)


@st.composite
def braid_and_word(draw, max_n: int = 5, max_len: int = 8):
    b = draw(braid_words(max_n=max_n, max_len=max_len))
    w = draw(free_words(n=b.strands, max_len=max_len))
    return b, w


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)
