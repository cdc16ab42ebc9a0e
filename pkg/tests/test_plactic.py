from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from core.base import AlphabetMismatch, InconsistentSign, RelationSet, SizeGuardExceeded
from core.algebra.plactic import (
    class_report, enumerate_classes, insert, insert_word, knuth_neighbors, normal_form,
    plactic_product, verify_class_bijection,
)
from core.algebra.shapes import SSYT, SignedLetter, alphabet, is_valid_ssyt, reading_word

E1, E2, E3 = SignedLetter.even(1), SignedLetter.even(2), SignedLetter.even(3)
O1, O2 = SignedLetter.odd(1), SignedLetter.odd(2)

words_2_2 = st.lists(st.sampled_from(alphabet(2, 2)), max_size=5).map(tuple)


def test_odd_moves_carry_a_minus_sign():
    assert ((O2, O1, O2), -1) in knuth_neighbors((O1, O2, O2))
    assert ((O1, O1, O2), -1) in knuth_neighbors((O1, O2, O1))


def test_even_moves_are_classical():
    assert ((E3, E1, E2), 1) in knuth_neighbors((E1, E3, E2))
    assert ((E2, E2, E1), 1) in knuth_neighbors((E2, E1, E2))


def test_singleton_class():
    assert knuth_neighbors((O2, O2, O1)) == []


def test_insertion_bumps_equal_odd_letters():
    row = SSYT.from_rows([[O1]])
    assert insert(row, O1).rows == ((O1,), (O1,))
    assert insert(SSYT.from_rows([[E1]]), E1).rows == ((E1, E1),)


def test_normal_form_signs():
    result = normal_form((O1, O2, O2))
    assert result.sign == -1
    assert result.tableau.rows == ((O1, O2), (O2,))

    result = normal_form((O1, O2, O1))
    assert result.sign == -1
    assert result.tableau.rows == ((O1, O2), (O1,))

    result = normal_form((E2, E3, E1))
    assert result.sign == 1
    assert reading_word(result.tableau) == (E2, E1, E3)


def test_normal_form_of_a_tableau_word_is_itself():
    tableau = SSYT.from_rows([[E1, O1], [O1]])
    result = normal_form(reading_word(tableau))
    assert result.sign == 1
    assert result.tableau == tableau


def test_unreachable_reading_word_is_reported():
    with pytest.raises(InconsistentSign, match="not reachable"):
        normal_form((E2, E2, E1), RelationSet.FIRST_ONLY)


def test_plactic_product():
    one_odd = SSYT.from_rows([[O1]])
    result = plactic_product(one_odd, one_odd, 0, 1)
    assert result.sign == 1
    assert result.tableau.rows == ((O1,), (O1,))
    with pytest.raises(AlphabetMismatch):
        plactic_product(one_odd, one_odd, 1, 0)


@given(words_2_2)
def test_insertion_produces_valid_tableaux_with_same_content(word):
    tableau = insert_word(word)
    assert is_valid_ssyt(tableau)
    assert Counter(tableau.letters()) == Counter(word)


@given(words_2_2)
def test_knuth_moves_preserve_content_and_insertion(word):
    for neighbor, sign in knuth_neighbors(word):
        assert Counter(neighbor) == Counter(word)
        assert sign in (1, -1)
        assert insert_word(neighbor) == insert_word(word)


@settings(max_examples=50, deadline=None)
@given(words_2_2, words_2_2, words_2_2)
def test_product_is_associative(u, v, w):
    tu, tv, tw = insert_word(u), insert_word(v), insert_word(w)
    left = plactic_product(plactic_product(tu, tv, 2, 2).tableau, tw, 2, 2)
    right = plactic_product(tu, plactic_product(tv, tw, 2, 2).tableau, 2, 2)
    assert left.tableau == right.tableau


@settings(max_examples=50, deadline=None)
@given(words_2_2, words_2_2)
def test_sign_of_concatenation_factors_through_prefix(u, v):
    # moves inside the prefix extend to the whole word with the same factor
    first = normal_form(u)
    rest = normal_form(reading_word(first.tableau) + v)
    assert normal_form(u + v).sign == first.sign * rest.sign


@pytest.mark.parametrize("m,n,r", [(1, 1, 3), (1, 1, 4), (2, 1, 3), (2, 0, 4), (0, 2, 4)])
def test_class_bijection(m, n, r):
    report = verify_class_bijection(m, n, r)
    assert report.passed, report.failed_checks()


def test_class_counts_one_one():
    summary = class_report(1, 1, 3)
    assert summary == {"classes": 6, "byShape": {"1,1,1": 2, "2,1": 2, "3": 2}, "signConsistent": True}
    assert len(enumerate_classes(1, 1, 4)) == 8


def test_corrupted_relations_break_the_bijection():
    report = verify_class_bijection(2, 0, 3, RelationSet.FIRST_ONLY)
    assert not report.passed
    assert not report.find("plactic-class-count").passed


def test_class_enumeration_size_guard():
    with pytest.raises(SizeGuardExceeded):
        enumerate_classes(2, 2, 11)
