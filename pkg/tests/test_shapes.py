from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from core.base import ShapeError
from core.algebra.shapes import (
    EMPTY_PARTITION, Partition, SignedLetter, SSYT, alphabet, conjugate, count_standard,
    enumerate_ssyt, hook_length_count, hook_partitions, in_hook, is_valid_ssyt, partitions_of, partitions_up_to,
    reading_word, ssyt_count, verify_hook_theorem, weight,
)

E1, E2 = SignedLetter.even(1), SignedLetter.even(2)
O1, O2 = SignedLetter.odd(1), SignedLetter.odd(2)


def test_alphabet_order_puts_evens_first():
    assert alphabet(2, 2) == [E1, E2, O1, O2]
    assert E2 < O1
    assert O1.rank(2) == 3


def test_partition_validation():
    with pytest.raises(ShapeError, match="weakly decreasing"):
        Partition((1, 2))
    with pytest.raises(ShapeError, match="positive"):
        Partition((2, 0))
    assert Partition((3, 1)).size == 4
    assert str(EMPTY_PARTITION) == "∅"


def test_partitions_of_counts():
    assert [len(partitions_of(r)) for r in range(7)] == [1, 1, 2, 3, 5, 7, 11]
    assert partitions_of(3) == [Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))]


@given(st.integers(0, 8).flatmap(lambda r: st.sampled_from(partitions_of(r))))
def test_conjugate_is_an_involution(shape):
    assert conjugate(conjugate(shape)) == shape
    assert conjugate(shape).size == shape.size


def test_hook_predicate():
    assert in_hook(Partition((2, 1, 1)), 1, 1)
    assert not in_hook(Partition((2, 2)), 1, 1)
    assert in_hook(Partition((5,)), 1, 0)
    assert not in_hook(Partition((1, 1)), 1, 0)
    assert hook_partitions(3, 1, 1) == [Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))]
    assert hook_partitions(3, 0, 1) == [Partition((1, 1, 1))]


def test_row_and_column_conditions():
    assert is_valid_ssyt([[E1, E1, O1], [O1]])
    assert not is_valid_ssyt([[O1, O1]])
    assert not is_valid_ssyt([[E1], [E1]])
    assert is_valid_ssyt([[O1], [O1]])
    with pytest.raises(ShapeError):
        SSYT.from_rows([[E1], [E1]])


def test_ssyt_count_example():
    assert ssyt_count(Partition((2, 1)), 1, 1) == 2
    tableaux = enumerate_ssyt(Partition((2, 1)), 1, 1)
    assert [[list(row) for row in t.rows] for t in tableaux] == [
        [[E1, E1], [O1]],
        [[E1, O1], [O1]],
    ]


@pytest.mark.parametrize("m,n,r,total", [
    (1, 1, 0, 1), (1, 1, 1, 2), (1, 1, 2, 4), (1, 1, 3, 6), (1, 1, 4, 8),
    (2, 0, 3, 6), (0, 2, 2, 4),
])
def test_tableau_totals_per_degree(m, n, r, total):
    # (1,1) gives the Hilbert coefficients 1, 2, 4, 6, 8 of the quotient
    assert sum(ssyt_count(shape, m, n) for shape in partitions_of(r)) == total


def test_enumeration_is_sorted_and_valid():
    tableaux = enumerate_ssyt(Partition((2, 2)), 2, 1)
    words = [reading_word(t) for t in tableaux]
    assert words == sorted(words, key=lambda w: [x.key for x in w])
    assert all(is_valid_ssyt(t) for t in tableaux)
    assert len(tableaux) == ssyt_count(Partition((2, 2)), 2, 1)


def test_outside_hook_has_no_tableaux():
    assert enumerate_ssyt(Partition((2, 2)), 1, 1) == []
    assert enumerate_ssyt(EMPTY_PARTITION, 1, 1) == [SSYT.empty()]


def test_reading_word_and_weight():
    tableau = SSYT.from_rows([[E1, O1], [O1]])
    assert reading_word(tableau) == (O1, E1, O1)
    assert weight(tableau, 1, 1) == (1, 2)
    assert tableau.fits(1, 1)
    assert not tableau.fits(1, 0)


@pytest.mark.parametrize("parts,expected", [
    ((1,), 1), ((2, 1), 2), ((3, 2), 5), ((3, 2, 1), 16), ((4, 4, 2), 252), ((5, 3, 1), 162),
])
def test_standard_tableau_counts(parts, expected):
    shape = Partition(parts)
    assert hook_length_count(shape) == expected
    assert count_standard(shape) == expected


def _all_valid_fillings(shape, m, n):
    """Fillings of the shape that satisfy the row and column rules, found by exhaustion"""
    found = set()
    for filling in product(alphabet(m, n), repeat=shape.size):
        rows, start = [], 0
        for length in shape.parts:
            rows.append(filling[start:start + length])
            start += length
        rows_ok = all(a < b or (a == b and not a.is_odd) for row in rows for a, b in zip(row, row[1:]))
        columns_ok = all(a < b or (a == b and a.is_odd)
                         for upper, lower in zip(rows, rows[1:]) for a, b in zip(upper, lower))
        if rows_ok and columns_ok:
            found.add(tuple(rows))
    return found


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 0), (0, 2), (3, 0), (0, 3)])
def test_enumeration_matches_exhaustive_filling(m, n):
    for shape in partitions_up_to(5):
        tableaux = enumerate_ssyt(shape, m, n)
        assert {t.rows for t in tableaux} == _all_valid_fillings(shape, m, n), str(shape)
        assert len(tableaux) == ssyt_count(shape, m, n)


@pytest.mark.parametrize("r", range(7))
def test_standard_counts_square_to_factorial(r):
    assert sum(count_standard(shape) ** 2 for shape in partitions_of(r)) == factorial(r)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 0), (0, 2)])
def test_hook_theorem(m, n):
    report = verify_hook_theorem(m, n, 5)
    assert report.passed
    assert report.checks[0].details["mismatches"] == []
