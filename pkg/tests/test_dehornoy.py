import pytest
from hypothesis import given, settings, strategies as st

from braidfree.braids import BraidWord, apply_braid, automorphism_of
from braidfree.dehornoy import (
    Order,
    Trichotomy,
    classify_sigma1,
    compare,
    main_index,
    sigma1_nonpositive_form,
    sign_of,
)
from braidfree.errors import IdentityInput, PositiveInput
from braidfree.freewords import generator

from conftest import braid_words


@st.composite
def sigma_positive_words(draw, max_n=5, max_len=8):
    """Words whose lowest generator occurs, and only with exponent +1."""
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, n - 1))
    above = [s for i in range(k + 1, n) for s in (i, -i)] + [k]
    body = draw(st.lists(st.sampled_from(above), max_size=max_len))
    pos = draw(st.integers(0, len(body)))
    return BraidWord(n, tuple(body[:pos]) + (k,) + tuple(body[pos:])), k


def test_classification_examples():
    assert classify_sigma1(BraidWord(3, (2,))) is Trichotomy.NEUTRAL
    assert classify_sigma1(BraidWord(2, (-1,))) is Trichotomy.NEGATIVE
    assert classify_sigma1(BraidWord(2, (1,))) is Trichotomy.POSITIVE


@given(sigma_positive_words())
def test_sigma_positive_words_are_positive(pair):
    b, k = pair
    assert sign_of(b) == 1
    assert main_index(b) == k
    assert sign_of(~b) == -1
    if k == 1:
        assert classify_sigma1(b) is Trichotomy.POSITIVE


@given(braid_words(max_n=5, max_len=10))
def test_trichotomy_laws(b):
    cls = classify_sigma1(b)
    assert classify_sigma1(~b) is cls.mirror()
    fixed = apply_braid(generator(1, b.strands), b).letters == (1,)
    assert (cls is Trichotomy.NEUTRAL) == fixed


def test_nonpositive_form_examples():
    assert sigma1_nonpositive_form(BraidWord(2, (-1,))).factors == (-1,)
    b = BraidWord(3, (2, -1, -2))
    form = sigma1_nonpositive_form(b)
    assert set(form.factors) <= {2, -1, -2}
    assert automorphism_of(form) == automorphism_of(b)
    assert len(form) <= 3 * 2**3 - 3
    c = BraidWord(3, (1, -2, -1, -1))
    assert classify_sigma1(c) is Trichotomy.NEGATIVE
    assert 1 not in sigma1_nonpositive_form(c).factors


def test_nonpositive_form_rejects_positive():
    with pytest.raises(PositiveInput):
        sigma1_nonpositive_form(BraidWord(2, (1,)))


@settings(max_examples=150)
@given(braid_words(max_n=5, max_len=8))
def test_nonpositive_form_round_trip(b):
    if classify_sigma1(b) is Trichotomy.POSITIVE:
        b = ~b
    form = sigma1_nonpositive_form(b)
    assert 1 not in form.factors
    assert automorphism_of(form) == automorphism_of(b)
    assert len(form) <= b.strands * 2 ** len(b) - b.strands


def test_main_index():
    assert main_index(BraidWord(4, (2,))) == 2
    assert main_index(BraidWord(4, (1,))) == 1
    assert main_index(BraidWord(4, (-3,))) == 3
    with pytest.raises(IdentityInput):
        main_index(BraidWord(4, (1, -1)))


def test_compare_examples():
    e = BraidWord(2, ())
    assert compare(BraidWord(2, (1,)), BraidWord(2, (1,))) is Order.EQ
    assert compare(BraidWord(2, (-1,)), e) is Order.LT
    assert compare(BraidWord(2, (1,)), e) is Order.GT
    assert compare(BraidWord(3, (1,)), BraidWord(3, (2,))) is Order.GT


@given(braid_words(max_n=4), braid_words(max_n=4), braid_words(max_n=4))
def test_order_laws(x, y, z):
    if not x.strands == y.strands == z.strands:
        return
    xy = compare(x, y)
    assert compare(y, x).sign == -xy.sign
    assert compare(x * z, y * z) is xy
    if xy is Order.LT and compare(y, z) is Order.LT:
        assert compare(x, z) is Order.LT
    assert (xy is Order.EQ) == (automorphism_of(x) == automorphism_of(y))


def test_generators_are_positive():
    for n in range(2, 7):
        for i in range(1, n):
            assert compare(BraidWord(n, (i,)), BraidWord(n, ())) is Order.GT
