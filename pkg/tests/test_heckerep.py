from fractions import Fraction

import pytest

from core.base import RankMismatch, SizeGuardExceeded
from core.algebra.exactmath import EPSILON, Q, Q_INV, ExactMatrix
from core.algebra.heckerep import (
    LONGEST_3, HeckeElement, Permutation, all_permutations, classical_sigma, commutant_rank,
    eulerian_idempotent, eulerian_idempotent_q, expected_commutant_rank, hecke_mul, idempotent_image,
    length, reduced_word, rho_action, rmatrix, sigma_action, verify_commutant, verify_gl_relations,
    verify_hecke_relations, verify_idempotents, verify_sigma_representation, verify_ybe_hecke,
)
from core.algebra.shapes import SignedLetter
from core.algebra.freealg import word_index

E1 = SignedLetter.even(1)
O1 = SignedLetter.odd(1)


def test_permutation_basics():
    s1, s2 = Permutation.simple(1, 3), Permutation.simple(2, 3)
    assert s1.images == (2, 1, 3)
    assert (s1 * s2).images == (2, 3, 1)
    assert (s1 * s2).inverse() == s2 * s1
    assert length(LONGEST_3) == 3
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(RankMismatch):
        s1 * Permutation.identity(2)


@pytest.mark.parametrize("w", all_permutations(4))
def test_reduced_words(w):
    word = reduced_word(w)
    assert len(word) == length(w)
    product = Permutation.identity(4)
    for i in word:
        product = product * Permutation.simple(i, 4)
    assert product == w


def test_hecke_quadratic_relation():
    t = HeckeElement.generator(1, 2)
    assert t * t == HeckeElement.identity(2) + t.scale(EPSILON)
    with pytest.raises(RankMismatch):
        hecke_mul(t, HeckeElement.identity(3))


@pytest.mark.parametrize("r", [2, 3, 4])
def test_hecke_relations(r):
    report = verify_hecke_relations(r)
    assert report.passed
    if r == 3:
        assert report.find("hecke-associativity").details["triples"] == 216


def test_idempotents():
    report = verify_idempotents()
    assert report.passed, report.failed_checks()
    assert report.find("idempotent-omega").details == {"left": True, "right": True}


def test_deformed_idempotent_specializes_to_classical():
    assert eulerian_idempotent_q().specialize(1) == eulerian_idempotent()
    e = eulerian_idempotent_q()
    assert e.coefficient(LONGEST_3) == e.coefficient(Permutation.identity(3))


def test_rmatrix_entries():
    r_hat = rmatrix(1, 1)
    even_even = word_index((E1, E1), 1, 1)
    odd_odd = word_index((O1, O1), 1, 1)
    even_odd, odd_even = word_index((E1, O1), 1, 1), word_index((O1, E1), 1, 1)
    assert r_hat.get(even_even, even_even) == Q
    assert r_hat.get(odd_odd, odd_odd) == -Q_INV
    assert r_hat.get(even_odd, even_odd) == EPSILON
    assert r_hat.get(even_odd, odd_even) == 1
    assert r_hat.get(odd_even, odd_even) == 0
    assert r_hat.evaluate(1) == classical_sigma(Permutation.simple(1, 2), 1, 1)


def test_classical_sigma_signs():
    sigma = classical_sigma(Permutation.simple(1, 2), 1, 1)
    odd_odd = word_index((O1, O1), 1, 1)
    assert sigma.get(odd_odd, odd_odd) == -1
    square = sigma @ sigma
    assert square == ExactMatrix.identity(4)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_yang_baxter_and_hecke(m, n):
    report = verify_ybe_hecke(m, n)
    assert report.passed, report.failed_checks()


@pytest.mark.parametrize("m,n,r", [(1, 1, 3), (2, 1, 3), (1, 1, 4)])
def test_sigma_representation(m, n, r):
    assert verify_sigma_representation(m, n, r).passed


@pytest.mark.parametrize("w", all_permutations(3))
def test_hecke_basis_at_one_is_the_signed_permutation(w):
    assert sigma_action(HeckeElement.basis(w), 1, 1, 1) == sigma_action(w, 1, 1)


def test_rho_on_v_is_a_matrix_unit():
    unit = rho_action(E1, O1, 1, 1, 1)
    assert unit.get(0, 1) == 1
    assert unit.nonzero_count() == 1


@pytest.mark.parametrize("m,n,r", [
    (1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2), (2, 0, 1), (0, 2, 1), (3, 0, 1), (0, 3, 1),
])
def test_gl_relations_close_with_standard_form(m, n, r):
    report = verify_gl_relations(m, n, r)
    assert report.passed
    assert report.checks[0].details["closingForm"] == "E_kj"


def test_gl_relations_single_letter_closes_both_ways():
    assert verify_gl_relations(1, 0).checks[0].details["closingForm"] == "both"


@pytest.mark.parametrize("m,n,r,rank", [(1, 1, 3, 6), (1, 0, 3, 1), (2, 0, 3, 5), (1, 1, 4, 20), (2, 1, 4, 24)])
def test_commutant_rank(m, n, r, rank):
    assert expected_commutant_rank(m, n, r) == rank
    assert commutant_rank(m, n, r) == rank


@pytest.mark.parametrize("m,n,r", [(1, 1, 3), (2, 1, 3), (1, 2, 2), (1, 1, 4), (2, 1, 4)])
def test_schur_weyl(m, n, r):
    report = verify_commutant(m, n, r)
    assert report.passed, report.failed_checks()


def test_commutant_degree_guard():
    with pytest.raises(SizeGuardExceeded):
        verify_commutant(1, 1, 5)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 0), (0, 3)])
def test_idempotent_image_is_the_gamma_span(m, n):
    report = idempotent_image(m, n, Fraction(7, 3))
    assert report.passed, report.failed_checks()
    assert "alternatives" not in report.find("gamma-in-image").details


def test_idempotent_image_lists_triple_placements():
    details = idempotent_image(2, 2, Fraction(7, 3)).find("gamma-in-image").details
    assert details["families"] == {str(f): True for f in range(1, 7)}
    assert details["placements"] == {
        "1,2,1'": "first-term",
        "1,2,2'": "first-term",
        "1,1',2'": "second-term",
        "2,1',2'": "second-term",
    }


def test_classical_idempotent_squares_to_itself_at_one():
    e = eulerian_idempotent()
    assert (e * e).specialize(1) == e
    assert e * e != e
    assert sigma_action(e, 1, 1, 1) @ sigma_action(e, 1, 1, 1) == sigma_action(e, 1, 1, 1)


def test_idempotent_report_names_every_check():
    names = [check.name for check in verify_idempotents().checks]
    assert names == [
        "idempotent-classical", "idempotent-deformed", "idempotent-omega", "idempotent-specialization",
    ]
