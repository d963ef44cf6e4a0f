import pytest
from hypothesis import given, settings, strategies as st

from braidfree.braids import BraidWord, Endomorphism, apply_braid, automorphism_of
from braidfree.cyclic import (
    PhiElement,
    expand_in_basis,
    format_torsion,
    parse_phi,
    parse_torsion,
    phi_basis,
    project,
    rewrite_in_basis,
    surface_check,
    surface_identification,
    surface_twist,
    tau,
    tau_product,
    torsion_word,
    tw_apply_braid,
    tw_images,
    tw_length,
    tw_multiply,
    tw_recover_braid,
    wada_action,
    wada_table,
)
from braidfree.errors import DomainError, InvalidTuple, NotInSubgroup, ParseError
from braidfree.freewords import FreeWord, generator, reduce

from conftest import braid_words, free_words


def tw(m, n, *pairs):
    return torsion_word(m, n, pairs)


# ----------------------------------------------------------------------
# Normal forms and length


def test_multiplication_merges_syllables():
    assert tw_multiply(tau(1, 2, 2), tau(1, 2, 2)).syllables == ()
    assert tw_multiply(tau(1, 3, 2, 2), tau(1, 3, 2, 2)).syllables == ((1, 1),)
    lhs = tw_multiply(tw(3, 2, (1, 1), (2, 1)), tw(3, 2, (2, 2), (1, 1)))
    assert lhs.syllables == ((1, 2),)


def test_torsion_length():
    assert len(tau(1, 3, 1)) == 2
    assert len(tau(1, 3, 1, 2)) == 1
    assert len(tau(1, 3, 1, -1)) == 1
    assert len(tau(1, 2, 1)) == 2
    assert tw_length(tw(2, 2)) == 0


@given(st.integers(2, 6), st.data())
def test_group_laws(m, data):
    n = 3
    word = lambda: tw(m, n, *data.draw(st.lists(st.tuples(st.integers(1, n), st.integers(1, m - 1)), max_size=6)))
    a, b, c = word(), word(), word()
    assert (a * b) * c == a * (b * c)
    assert (a * ~a).syllables == ()
    assert (a * b) * ~b == a


def test_projection_examples():
    assert project(FreeWord(2, (1, -2)), 2).syllables == ((1, 1), (2, 1))
    assert project(FreeWord(2, (1, 1)), 3).syllables == ((1, 2),)
    assert project(FreeWord(2, (1, 2, -1)), 2).syllables == ((1, 1), (2, 1), (1, 1))


# ----------------------------------------------------------------------
# Braid action and recovery


def test_action_table():
    assert tw_apply_braid(tau(1, 2, 2), BraidWord(2, (1,))) == tau(2, 2, 2)
    assert tw_apply_braid(tau(2, 2, 2), BraidWord(2, (1,))) == tau_product((2, 1, 2), 2, 2)


@given(braid_words(max_n=5, max_len=8), st.sampled_from([2, 3, 4, 5]), st.data())
def test_projection_commutes_with_the_action(b, m, data):
    w = data.draw(free_words(n=b.strands, max_len=8))
    assert project(apply_braid(w, b), m) == tw_apply_braid(project(w, m), b)


def test_recover_examples():
    assert tw_recover_braid(tw_images(BraidWord(3, ()), 2)).factors == ()
    b = BraidWord(3, (1, 2))
    back = tw_recover_braid(tw_images(b, 2))
    assert automorphism_of(back) == automorphism_of(b)


@settings(max_examples=150)
@given(braid_words(max_n=5, max_len=10), st.sampled_from([2, 3, 4]))
def test_recover_round_trip(b, m):
    images = tw_images(b, m)
    back = tw_recover_braid(images)
    assert automorphism_of(back) == automorphism_of(b)
    if not automorphism_of(b).is_identity():
        assert any(images[i] != tau(i + 1, m, b.strands) for i in range(b.strands))


def test_recover_rejects_bad_tuples():
    with pytest.raises(InvalidTuple):
        tw_recover_braid([tau(2, 2, 2), tau(1, 2, 2)])
    with pytest.raises(InvalidTuple):
        tw_recover_braid([tau(1, 2, 2), tau(1, 2, 2)])


# ----------------------------------------------------------------------
# Phi_n and its free bases


def test_basis_examples():
    b2 = phi_basis(2, 2)
    assert [x.underlying for x in b2] == [tau_product((3, 1), 2, 3), tau_product((3, 2), 2, 3)]
    b1 = phi_basis(1, 2)
    assert [x.underlying for x in b1] == [tau_product((1, 2), 2, 3), tau_product((2, 3), 2, 3)]


def test_third_basis_uses_shifted_indices():
    # x_k = tau_(n+1)^(tau_1 ... tau_(k-1)) tau_k; for n = 1 this is tau_2 tau_1
    assert phi_basis(3, 1)[0].underlying == tau_product((2, 1), 2, 2)
    assert phi_basis(3, 3)[2].underlying == tau_product((2, 1, 4, 1, 2, 3), 2, 4)


def test_unshifted_third_basis_is_not_a_basis():
    # tau_2^tau_1 tau_2 = (tau_1 tau_2)^2 generates a proper subgroup of Phi_1
    x = tau_product((1, 2, 1, 2), 2, 2)
    with pytest.raises(NotInSubgroup):
        rewrite_in_basis(tau_product((1, 2), 2, 2), [x])


@pytest.mark.parametrize("variant", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_bases_span_phi(variant, n):
    basis = phi_basis(variant, n)
    for i in range(1, n + 2):
        for j in range(1, n + 2):
            g = tau_product((i, j), 2, n + 1)
            assert expand_in_basis(rewrite_in_basis(g, basis).letters, basis) == g


def test_rewrite_examples():
    basis = phi_basis(2, 2)
    assert rewrite_in_basis(tau_product((3, 1), 2, 3), basis).letters == (1,)
    assert rewrite_in_basis(tau_product((1, 2), 2, 3), basis).letters == (-1, 2)
    assert rewrite_in_basis(tw(2, 3), basis).letters == ()


def test_phi_parity():
    with pytest.raises(DomainError):
        parse_phi("1^1", 2)
    g = parse_phi("1^1 3^1", 2)
    assert isinstance(g, PhiElement) and g.n == 2


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("variant", [2, 3, 4])
def test_closed_form_tables_from_basis_change(n, variant):
    for i in range(1, n + 1):
        got = [wada_action(generator(k, n), BraidWord(n + 1, (i,)), variant).letters for k in range(1, n + 1)]
        assert got == wada_table(variant, n, i)


def test_second_variant_last_row_uses_x_n():
    # x_k -> x_n x_k under sigma_n; the row x_(n-1) x_k does not match
    for n in range(2, 6):
        for k in range(1, n):
            got = wada_action(generator(k, n), BraidWord(n + 1, (n,)), 2).letters
            assert got == (n, k)
            assert got != (n - 1, k)


def test_first_variant_examples():
    n = 3
    s = BraidWord(n, (1,))
    assert wada_action(generator(1, n), s, 1).letters == (2,)
    assert wada_action(generator(2, n), s, 1, m=2).letters == (-2, -2, 1, 2, 2)


@pytest.mark.parametrize("m", [2, 3])
@given(b=braid_words(max_n=4, max_len=6))
def test_first_variant_powers_follow_the_standard_action(m, b):
    n = b.strands
    powers = Endomorphism(n, tuple(reduce([k] * m, n) for k in range(1, n + 1)))
    for k in range(1, n + 1):
        lhs = wada_action(reduce([k] * m, n), b, 1, m)
        rhs = powers.apply(apply_braid(generator(k, n), b))
        assert lhs == rhs


def test_first_variant_rejects_zero():
    with pytest.raises(DomainError):
        wada_action(generator(1, 2), BraidWord(2, (1,)), 1, m=0)


# ----------------------------------------------------------------------
# The surface identification


@pytest.mark.parametrize("g", [1, 2, 3])
def test_surface_check(g):
    report = surface_check(g)
    assert report.ok, report.failures


def test_surface_identification_generators():
    x1, y1 = surface_identification(1)
    assert x1 == tau_product((3, 2), 2, 3)
    assert y1 == tau_product((3, 1, 2, 3), 2, 3)


def test_corrupted_twist_is_reported():
    def corrupt(kind, i, g):
        if kind == "gamma":
            return surface_twist("beta", i, g)
        return surface_twist(kind, i, g)

    assert not surface_check(2, override=corrupt).ok


# ----------------------------------------------------------------------
# Text format


def test_torsion_text():
    w = parse_torsion("1^2 3^1", 3, 3)
    assert w.syllables == ((1, 2), (3, 1))
    assert format_torsion(w) == "1^2 3^1"
    assert format_torsion(tw(2, 2)) == "e"
    with pytest.raises(ParseError):
        parse_torsion("4^1", 2, 3)


@given(st.integers(2, 5), st.lists(st.tuples(st.integers(1, 3), st.integers(1, 4)), max_size=6))
def test_torsion_text_round_trip(m, raw):
    w = tw(m, 3, *raw)
    assert parse_torsion(format_torsion(w), m, 3) == w
