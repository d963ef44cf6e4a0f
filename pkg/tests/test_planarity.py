import pytest
from hypothesis import given, settings, strategies as st

from braidfree.braids import BraidWord, apply_braid
from braidfree.errors import DomainError, NotPlanar
from braidfree.freewords import FreeWord, conjugate, generator, prod_t
from braidfree.planarity import (
    embeds,
    emit_diagram,
    is_nested,
    is_planar,
    label_rank,
    orbit_clause_failures,
    orbit_criterion,
    orbit_reduce,
    planar,
    planar_oracle,
    planar_tuple_oracle,
    representative,
    t1_orbit_witness,
    tuple_orbit_witness,
    whitehead_expansion,
)

from conftest import all_reduced_words, braid_words, brute_planar, free_words


def w(n, *letters):
    return FreeWord(n, letters)


def cycles_to_perm(size, cycles):
    perm = list(range(1, size + 1))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a - 1] = b
    return tuple(perm)


# Ranks: z^-1 = 0, t_i = 2i - 1, t_i^-1 = 2i, z = 2n + 1
def test_label_ranks():
    assert [label_rank(a) for a in (1, -1, 2, -2)] == [1, 2, 3, 4]


def test_expansion_examples():
    assert whitehead_expansion(w(2)) == (0, 5)
    assert whitehead_expansion(w(3, 3)) == (0, 5, 6, 7)
    assert whitehead_expansion(w(2, 1, 2, -1)) == (0, 1, 2, 3, 4, 2, 1, 5)


def test_printed_layout_belongs_to_t1_t2_t1inv():
    # (z^-1, t1, t1^-1, t2, t2^-1, t1^-1, t1, z) with pi = (3,5,7)(4,6)
    emb = is_planar(w(2, 1, 2, -1))
    assert emb is not None
    assert emb.perm == cycles_to_perm(8, [(3, 5, 7), (4, 6)])
    assert len(emb.points) == 8 and len(emb.upper_arcs) == 4 and len(emb.lower_arcs) == 3
    assert [label for _, label in emb.points] == [0, 1, 1, 2, 2, 3, 4, 5]


def test_t1_t2inv_t1inv_is_not_planar():
    # the word lies in the cone of t1 t2^-1, and every layout crosses
    x = w(2, 1, -2, -1)
    assert is_planar(x) is None
    assert not planar_oracle(x)
    assert not brute_planar(whitehead_expansion(x))


def test_non_planar_examples():
    assert not planar(w(2, 1, -2))
    assert not planar(w(2, 1, 1))
    assert not planar(w(3, 1, 2, 2, 3))


def test_same_graph_different_answers():
    inner = conjugate(generator(3, 3), w(3, 1, -2, -1))
    outer = conjugate(generator(3, 3), w(3, 1, 2, -1))
    assert planar(inner) and planar_tuple_oracle(whitehead_expansion(inner)) is not None
    assert not planar(outer) and planar_tuple_oracle(whitehead_expansion(outer)) is None


def test_trivial_embeddings():
    emb = is_planar(w(2))
    assert emb is not None and len(emb.points) == 2 and len(emb.upper_arcs) == 1 and not emb.lower_arcs
    emb = is_planar(w(3, 3))
    assert len(emb.points) == 4 and len(emb.upper_arcs) == 2 and len(emb.lower_arcs) == 1


def test_nesting_helpers():
    assert is_nested([(1, 4), (2, 3)])
    assert not is_nested([(1, 3), (2, 4)])
    assert not is_nested([(1, 2), (2, 3)])
    assert not embeds((0, 2, 1, 3), (1, 2, 3, 4))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_oracle_and_brute_force_agree_exhaustively(n):
    for letters in all_reduced_words(n, 3):
        x = FreeWord(n, letters)
        expected = brute_planar(whitehead_expansion(x))
        assert planar(x) == expected == planar_oracle(x), letters


def test_oracle_length_guard():
    with pytest.raises(DomainError):
        planar_oracle(w(2, *([1] * 7)))


@settings(max_examples=300)
@given(free_words(max_n=4, max_len=6))
def test_algorithm_matches_oracle(x):
    assert planar(x) == planar_oracle(x)


@given(free_words(max_n=4, max_len=12))
def test_embedding_is_valid(x):
    emb = is_planar(x)
    if emb is not None:
        assert embeds(whitehead_expansion(x), emb.perm)


@given(free_words(max_n=4, max_len=10))
def test_planar_words_are_squarefree(x):
    if planar(x):
        assert all(a != b for a, b in zip(x.letters, x.letters[1:]))


@given(braid_words(max_n=5, max_len=8), st.data())
def test_braids_preserve_planarity(b, data):
    n = b.strands
    k = data.draw(st.integers(0, n))
    x = apply_braid(representative(k, n), data.draw(braid_words(min_n=n, max_n=n)))
    assert planar(x)
    assert planar(apply_braid(x, b))


@given(braid_words(max_n=5, max_len=8), st.data())
def test_orbit_reduce_finds_the_representative(b, data):
    n = b.strands
    k = data.draw(st.integers(0, n))
    x = apply_braid(representative(k, n), b)
    kk, phi = orbit_reduce(x)
    assert kk == k
    assert apply_braid(x, phi) == prod_t(1, k, n)


def test_representatives_are_distinct_orbits():
    for n in range(1, 5):
        for k in range(n + 1):
            assert orbit_reduce(representative(k, n)) == (k, BraidWord(n, ()))


def test_orbit_examples():
    assert orbit_reduce(w(2, 1, 2)) == (2, BraidWord(2, ()))
    k, phi = orbit_reduce(w(2, 1, 2, -1))
    assert k == 1 and apply_braid(w(2, 1, 2, -1), phi) == w(2, 1)
    with pytest.raises(NotPlanar):
        orbit_reduce(w(2, 1, -2))


def test_t1_orbit_examples():
    phi = t1_orbit_witness(w(3, 2))
    assert phi is not None and apply_braid(w(3, 2), phi) == w(3, 1)
    assert t1_orbit_witness(w(3, 1, 2, 2, 3)) is None


@given(free_words(max_n=4, max_len=10))
def test_membership_criteria_agree(x):
    assert (t1_orbit_witness(x) is not None) == orbit_criterion(x)


@given(braid_words(max_n=6, max_len=10), st.data())
def test_orbit_words_avoid_forbidden_shapes(b, data):
    k = data.draw(st.integers(1, b.strands))
    assert orbit_clause_failures(apply_braid(generator(k, b.strands), b)) == []


def test_forbidden_shapes_are_detected():
    assert "squarefree" in orbit_clause_failures(w(2, 1, 1))
    assert orbit_clause_failures(w(3, -3, 2, 3)) == []
    assert orbit_clause_failures(w(3, 1, -2)) != []


def test_tuple_examples():
    assert tuple_orbit_witness([w(3, 1), w(3, 2)]) == BraidWord(3, ())
    phi = tuple_orbit_witness([w(2, 2), w(2, -2, 1, 2)])
    assert phi is not None
    assert apply_braid(w(2, 2), phi) == w(2, 1) and apply_braid(w(2, -2, 1, 2), phi) == w(2, 2)
    assert tuple_orbit_witness([w(2, 2), w(2, 1)]) is None


@given(braid_words(max_n=5, max_len=8), st.data())
def test_tuple_witness_round_trip(b, data):
    n = b.strands
    k = data.draw(st.integers(1, n))
    ws = [apply_braid(generator(j, n), b) for j in range(1, k + 1)]
    phi = tuple_orbit_witness(ws)
    assert phi is not None
    assert [apply_braid(x, phi) for x in ws] == [generator(j, n) for j in range(1, k + 1)]


def test_diagram_is_deterministic_svg():
    emb = is_planar(w(2, 1, 2, -1))
    svg = emit_diagram(emb)
    assert svg == emit_diagram(emb)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert svg.count('class="upper"') == 4 and svg.count('class="lower"') == 3


def test_single_letters():
    assert all(planar(generator(i, 3)) for i in range(1, 4))
    assert not any(planar(generator(i, 3, -1)) for i in range(1, 4))
