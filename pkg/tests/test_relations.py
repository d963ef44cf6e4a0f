import pytest

from braidfree.braids import BraidWord, SemidirectElement, apply_braid, automorphism_of
from braidfree.errors import DomainError
from braidfree.freewords import generator
from braidfree.relations import (
    artin_relations,
    check_semidirect_identities,
    check_embedding,
    check_relations,
    frak_t,
    embedding_image,
    semidirect_generators,
    semidirect_inverse,
)
from braidfree.braids import semidirect_conjugate


@pytest.mark.parametrize("n", [3, 6])
def test_relations_hold(n):
    report = check_relations(n)
    assert report.ok, report.failures


def test_corrupted_relation_is_reported():
    bogus = [("s1 s2 = s2 s1", BraidWord(3, (1, 2)), BraidWord(3, (2, 1)))]
    report = check_relations(3, extra=bogus)
    assert report.failures == ["s1 s2 = s2 s1"]


def test_relation_count():
    # far commutations for 1 <= i, i+2 <= j <= n-1, plus n-2 braid relations
    n = 6
    far = sum(1 for i in range(1, n) for j in range(i + 2, n))
    assert len(artin_relations(n)) == far + n - 2


def test_check_relations_domain():
    with pytest.raises(DomainError):
        check_relations(1)


@pytest.mark.parametrize("n", range(2, 7))
def test_stabilizer_embedding(n):
    assert check_embedding(n).ok


def test_embedding_image_is_a_pure_braid():
    for n in range(2, 6):
        for k in range(1, n + 1):
            assert automorphism_of(embedding_image(k, n)).perm == tuple(range(1, n + 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_semidirect_identities(n):
    report = check_semidirect_identities(n)
    assert report.ok, report.failures


def test_frak_t_step():
    # frak_t_(m+1)^(b_m^-1) = frak_t_m in B_3 x| F_3
    n = 3
    b = semidirect_generators(n)
    for m in range(1, n):
        lhs = semidirect_conjugate(frak_t(m + 1, n), semidirect_inverse(b[m]))
        assert lhs.equals(frak_t(m, n))


def test_semidirect_conjugation_realises_the_action():
    # (1, w)^(sigma, 1) = (1, w^sigma)
    n = 3
    w = generator(2, n)
    s = SemidirectElement(BraidWord(n, (2,)), generator(1, n) * ~generator(1, n))
    conj = semidirect_conjugate(SemidirectElement(BraidWord(n, ()), w), s)
    assert conj.word == apply_braid(w, BraidWord(n, (2,)))
