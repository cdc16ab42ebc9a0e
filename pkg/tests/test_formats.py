import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from openpyxl import load_workbook

from core.base import CheckStatus, ParseError, VerificationReport, make_check
from core.algebra.freealg import TensorElement
from core.algebra.heckerep import HeckeElement
from core.algebra.shapes import Partition, SignedLetter, enumerate_ssyt
from core.algebra.symfunc import hook_schur_ssyt
from core.formats.text_format import (
    character_to_json, dump_json, format_rational, format_shape, format_tableau, format_word,
    hecke_to_json, parse_letter, parse_rational, parse_shape, parse_tableau, parse_word,
    tableau_from_json, tableau_to_json, tensor_to_json,
)
from core.formats.xlsx_format import ReportXlsxWriter

E1, E2 = SignedLetter.even(1), SignedLetter.even(2)
O1 = SignedLetter.odd(1)


def test_letters_and_words():
    assert parse_letter("1'") == O1
    assert parse_letter(" 2 ") == E2
    assert parse_word("1,1',2") == (E1, O1, E2)
    assert parse_word("") == ()
    assert format_word((E1, O1)) == "1,1'"


@pytest.mark.parametrize("text", ["bogus", "0", "1''", "1,,2", "-1", "1'a"])
def test_bad_words(text):
    with pytest.raises(ParseError, match="word"):
        parse_word(text)


def test_shapes():
    assert parse_shape("2,1") == Partition((2, 1))
    assert parse_shape("∅") == Partition(())
    assert format_shape(Partition((3, 1, 1))) == "3,1,1"
    with pytest.raises(ParseError, match="weakly decreasing"):
        parse_shape("1,2")
    with pytest.raises(ParseError):
        parse_shape("2,x")


def test_rationals():
    assert parse_rational("7/3") == Fraction(7, 3)
    assert parse_rational("-2") == -2
    assert format_rational(Fraction(14, 6)) == "7/3"
    assert format_rational(Fraction(4, 2)) == "2"
    for bad in ("1/0", "q", "1/-3", ""):
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_tableau_text_and_json():
    tableau = parse_tableau("1,1'/1'")
    assert tableau.rows == ((E1, O1), (O1,))
    assert format_tableau(tableau) == "1,1'/1'"
    data = tableau_to_json(tableau)
    assert data == {"shape": [2, 1], "rows": [["1", "1'"], ["1'"]]}
    assert tableau_from_json(data) == tableau
    assert parse_tableau(json.dumps(data)) == tableau
    assert format_tableau(parse_tableau("")) == "∅"


def test_invalid_tableaux():
    with pytest.raises(ParseError, match="invalid tableau"):
        parse_tableau("1/1")
    with pytest.raises(ParseError):
        parse_tableau('{"rows": 5}')
    with pytest.raises(ParseError, match="does not match"):
        tableau_from_json({"shape": [3], "rows": [["1", "2"]]})
    with pytest.raises(ParseError):
        parse_tableau("1,2//1")


@given(st.sampled_from(enumerate_ssyt(Partition((3, 2)), 2, 2)))
def test_printed_tableaux_parse_back(tableau):
    assert parse_tableau(format_tableau(tableau)) == tableau
    assert tableau_from_json(json.loads(dump_json(tableau_to_json(tableau)))) == tableau


def test_algebra_elements_to_json():
    character = character_to_json(hook_schur_ssyt(Partition((2, 1)), 1, 1))
    assert character["variables"] == ["x", "y"]
    assert character["terms"] == [
        {"exponents": [2, 1], "coefficient": "1"},
        {"exponents": [1, 2], "coefficient": "1"},
    ]
    assert character["graded"] == [0, 0, 0, 2]

    element = TensorElement.word((E1, E2), Fraction(1, 2))
    assert tensor_to_json(element) == [{"word": ["1", "2"], "coefficient": {"num": "1/2", "den": "1"}}]
    assert hecke_to_json(HeckeElement.identity(2)) == {"r": 2, "terms": [{"perm": [1, 2], "coeff": "1"}]}


def _sample_report() -> VerificationReport:
    report = VerificationReport(parameters={"m": 1, "n": 1})
    report.add(make_check("hook-identity", {"m": 1, "n": 1}, True, {"terms": 12}, 1.5))
    report.add(make_check("schur-weyl-rank", {"r": 3}, False, {"rank": 5, "expected": 6}, 2.0))
    return report


def test_xlsx_report(tmp_path):
    path = tmp_path / "report.xlsx"
    written = ReportXlsxWriter.write(path, _sample_report())
    assert written == 2

    wb = load_workbook(path)
    ws = wb["Checks"]
    assert [c.value for c in ws[1]] == ReportXlsxWriter.HEADERS
    assert ws.cell(row=2, column=1).value == "hook-identity"
    assert ws.cell(row=3, column=2).value == CheckStatus.FAIL.value
    assert json.loads(ws.cell(row=3, column=4).value) == {"rank": 5, "expected": 6}
    assert ws.freeze_panes == "A2"

    summary = {row[0].value: row[1].value for row in wb["Summary"].iter_rows()}
    assert summary["Artifact"] == "superplactic-kit"
    assert summary["Checks"] == 2
    assert summary["Failed"] == 1
    assert summary["Overall"] == "fail"


def test_xlsx_report_without_timings(tmp_path):
    path = tmp_path / "report.xlsx"
    ReportXlsxWriter.write(path, _sample_report(), include_elapsed=False)
    ws = load_workbook(path)["Checks"]
    assert ws.cell(row=2, column=5).value is None
