from collections import Counter

import pytest
import sympy

from core.base import ContainmentError
from core.algebra.shapes import Partition, conjugate, enumerate_ssyt, partitions_up_to, weight
from core.algebra.symfunc import (
    hook_identity_check, hook_schur_factorized, hook_schur_ssyt, schur, schur_identity_check,
    skew_schur, specialize_graded, subpartitions, verify_character_routes,
)


def test_schur_polynomial_small_cases():
    s21 = schur(Partition((2, 1)), 2)
    assert s21.poly.terms == {(2, 1): 1, (1, 2): 1}
    assert schur(Partition((1, 1, 1)), 2).is_zero()
    assert schur(Partition((2,)), 2).poly.terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1}


def test_hook_schur_from_tableaux():
    hs = hook_schur_ssyt(Partition((2, 1)), 1, 1)
    assert hs.poly.terms == {(2, 1): 1, (1, 2): 1}
    assert str(hs) == "x^2*y + x*y^2"
    assert specialize_graded(hs) == [0, 0, 0, 2]
    assert hs.has_nonnegative_integer_coefficients()


def test_skew_schur():
    skew = skew_schur(Partition((2, 1)), Partition((1,)), 2)
    assert skew.poly.coefficient((1, 1)) == 2
    assert skew.poly.coefficient((2, 0)) == 1
    with pytest.raises(ContainmentError):
        skew_schur(Partition((1,)), Partition((2,)), 2)


def test_subpartitions_include_both_ends():
    subs = subpartitions(Partition((2, 1)))
    assert len(subs) == 5
    assert Partition(()) in subs and Partition((2, 1)) in subs


def _bialternant_terms(shape, m):
    """s_lambda(x1..xm) as det(x_i^(lambda_j + m - j)) / det(x_i^(m - j))"""
    x = sympy.symbols(f"x1:{m + 1}")
    parts = [shape.part(j) for j in range(m)]
    numerator = sympy.Matrix(m, m, lambda i, j: x[i] ** (parts[j] + m - 1 - j)).det()
    vandermonde = sympy.Matrix(m, m, lambda i, j: x[i] ** (m - 1 - j)).det()
    poly = sympy.Poly(sympy.cancel(numerator / vandermonde), *x)
    return {exps: int(coeff) for exps, coeff in poly.terms()}


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("shape", [p for p in partitions_up_to(6) if p.size > 0], ids=str)
def test_even_and_odd_limits(shape, m):
    # purely even alphabet gives s_lambda, purely odd gives s_lambda' in the odd variables
    assert hook_schur_ssyt(shape, m, 0).poly == schur(shape, m).poly
    assert hook_schur_ssyt(shape, 0, m).poly == schur(conjugate(shape), m).poly
    if len(shape) <= m:
        assert schur(shape, m).poly.terms == _bialternant_terms(shape, m)
    else:
        assert schur(shape, m).is_zero()


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_coefficients_count_tableaux_of_each_weight(m, n):
    for shape in partitions_up_to(4):
        tableaux = Counter(weight(t, m, n) for t in enumerate_ssyt(shape, m, n))
        assert hook_schur_ssyt(shape, m, n).poly.terms == dict(tableaux)
        assert hook_schur_factorized(shape, m, n).poly.terms == dict(tableaux)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_factorized_route_agrees_for_small_shapes(m, n):
    for shape in partitions_up_to(4):
        assert hook_schur_factorized(shape, m, n) == hook_schur_ssyt(shape, m, n)


def test_character_routes_two_two():
    report = verify_character_routes(2, 2, 5)
    assert report.passed
    assert report.checks[0].details["shapes"] == 19


@pytest.mark.parametrize("m", [1, 2, 3])
def test_classical_schur_identity(m):
    report = schur_identity_check(m, 6)
    assert report.passed
    assert report.checks[0].details["firstDiscrepancy"] is None


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_hook_schur_identity(m, n):
    report = hook_identity_check(m, n, 6)
    assert report.passed


def test_hook_identity_graded_series_for_one_one():
    details = hook_identity_check(1, 1, 6).checks[0].details
    assert details["gradedLhs"] == [1, 2, 4, 6, 8, 10, 12]
    assert details["gradedLhs"] == details["gradedRhs"]
