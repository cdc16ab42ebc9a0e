import io
import json
from fractions import Fraction

import pytest

from controller import EXIT_FAILED, EXIT_OK, KitController
from core.base import OutputFormat, ParseError, RelationSet
from core.settings import KitSettings


def _controller(**settings):
    out = io.StringIO()
    return KitController(KitSettings(**settings), out), out


def test_ssyt_count_and_list():
    c, out = _controller()
    assert c.ssyt("count", "2,1", 1, 1, OutputFormat.TEXT) == EXIT_OK
    assert out.getvalue() == "2\n"

    c, out = _controller()
    c.ssyt("list", "2,1", 1, 1, OutputFormat.TEXT)
    assert set(out.getvalue().split()) == {"1,1/1'", "1,1'/1'"}


def test_ssyt_json_and_csv():
    c, out = _controller()
    c.ssyt("count", "3,1", 2, 0, OutputFormat.JSON)
    assert json.loads(out.getvalue()) == {"shape": "3,1", "m": 2, "n": 0, "count": 3}

    c, out = _controller()
    c.ssyt("list", "2,1", 1, 1, OutputFormat.CSV)
    lines = out.getvalue().splitlines()
    assert lines[0] == "index,shape,rows,readingWord"
    assert len(lines) == 3


def test_ssyt_outside_the_hook_is_empty():
    c, out = _controller()
    c.ssyt("count", "2,2", 1, 0, OutputFormat.TEXT)
    assert out.getvalue() == "0\n"


def test_character_text_and_json():
    c, out = _controller()
    c.character("hook-schur", "2,1", 1, 1, "ssyt", OutputFormat.TEXT)
    assert out.getvalue() == "x^2*y + x*y^2\n"

    c, out = _controller()
    c.character("hook-schur", "2,1", 1, 1, "factorized", OutputFormat.JSON)
    assert json.loads(out.getvalue())["graded"] == [0, 0, 0, 2]


def test_character_csv_columns():
    c, out = _controller()
    c.character("schur", "2", 2, 0, "ssyt", OutputFormat.CSV)
    lines = out.getvalue().splitlines()
    assert lines[0] == "x1,x2,coefficient"
    assert len(lines) == 4


def test_plactic_normal_form_prints_sign_and_tableau():
    c, out = _controller()
    c.plactic_normal_form("1',2',2'", OutputFormat.TEXT)
    assert out.getvalue() == "-1 1',2'/2'\n"

    c, out = _controller()
    c.plactic_normal_form("2,3,1", OutputFormat.JSON)
    data = json.loads(out.getvalue())
    assert data["sign"] == 1
    assert data["tableau"]["rows"] == [["1", "3"], ["2"]]


def test_plactic_product_infers_alphabet():
    c, out = _controller()
    c.plactic_product("1'", "1'", None, None, OutputFormat.TEXT)
    assert out.getvalue() == "+1 1'/1'\n"


def test_plactic_classes():
    c, out = _controller()
    c.plactic_classes(1, 1, 3, OutputFormat.TEXT)
    lines = out.getvalue().splitlines()
    assert lines[:2] == ["classes: 6", "signConsistent: true"]
    assert "  2,1: 2" in lines


def test_verify_passing_suite():
    c, out = _controller()
    assert c.verify("hook-identity", OutputFormat.JSON, m=1, n=1, max_degree=6) == EXIT_OK
    data = json.loads(out.getvalue())
    assert data["overall"] == "pass"
    assert data["parameters"]["suite"] == "hook-identity"


def test_verify_with_corrupted_relations_fails():
    c, out = _controller(relation_set=RelationSet.FIRST_ONLY)
    assert c.verify("plactic", OutputFormat.TEXT, m=2, n=0, length=3) == EXIT_FAILED
    assert "[FAIL] plactic-class-count" in out.getvalue()


def test_verify_unknown_suite():
    c, _ = _controller()
    with pytest.raises(KeyError, match="unknown check suite"):
        c.verify("bogus", OutputFormat.TEXT)


def test_verify_idempotent_reports_elements_as_json():
    c, out = _controller()
    assert c.verify("idempotent", OutputFormat.JSON) == EXIT_OK
    checks = {check["name"]: check for check in json.loads(out.getvalue())["checks"]}
    classical = checks["idempotent-classical"]["details"]["element"]
    assert classical["r"] == 3
    assert [term["perm"] for term in classical["terms"]][:1] == [[1, 2, 3]]
    assert len(classical["terms"]) == 6
    assert checks["idempotent-deformed"]["details"]["element"]["r"] == 3


def test_verify_gamma_lists_generators():
    c, out = _controller()
    assert c.verify("gamma", OutputFormat.JSON, m=1, n=1) == EXIT_OK
    checks = {check["name"]: check for check in json.loads(out.getvalue())["checks"]}
    generators = checks["gamma-count"]["details"]["generators"]
    assert sorted(g["family"] for g in generators) == [3, 6]
    rows = sorted(g["tableau"]["rows"] for g in generators)
    assert rows == [[["1", "1"], ["1'"]], [["1", "1'"], ["1'"]]]
    assert all(term["word"] and term["coefficient"]["den"] for g in generators for term in g["terms"])


def test_verify_rejects_zero_specialization():
    c, _ = _controller()
    with pytest.raises(ParseError, match="nonzero"):
        c.verify("gamma", OutputFormat.TEXT, m=1, n=1, q0=Fraction(0))


def test_report_all_writes_file_and_details_log(tmp_path):
    c, out = _controller()
    path = tmp_path / "report.json"
    log = tmp_path / "checks.log"
    assert c.report_all(path, 1, 1, 4, 3, 3, details_log=str(log)) == EXIT_OK
    assert out.getvalue().startswith("pass: ")
    assert f"json report written to {path}" in out.getvalue()
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["overall"] == "pass"
    logged = log.read_text(encoding="utf-8").splitlines()
    assert len(logged) == len(data["checks"]) + 1
    assert "OVERALL PASS" in logged[-1]


def test_report_all_rejects_unknown_suffix_before_running(tmp_path):
    c, _ = _controller()
    with pytest.raises(ParseError):
        c.report_all(tmp_path / "report.pdf", 1, 1, 4, 3, 3)
    assert not (tmp_path / "report.pdf").exists()


SUITE_ARGS = {
    "schur-identity": ["--m", "1", "--max-degree", "2"],
    "hook-identity": ["--m", "1", "--n", "1", "--max-degree", "2"],
    "characters": ["--m", "1", "--n", "1", "--max-size", "2"],
    "hook-theorem": ["--m", "1", "--n", "1", "--rmax", "2"],
    "plactic": ["--m", "1", "--n", "1", "--length", "2"],
    "dimensions": ["--m", "1", "--n", "1", "--max-degree", "2"],
    "character-dimensions": ["--m", "1", "--n", "1", "--max-degree", "2"],
    "jacobi": ["--m", "1", "--n", "1"],
    "gamma": ["--m", "1", "--n", "1"],
    "multilinear": ["--max-r", "2"],
    "ybe": ["--m", "1", "--n", "1"],
    "idempotent": [],
    "gl": ["--m", "1", "--n", "1"],
    "schur-weyl": ["--m", "1", "--n", "1", "--r", "2"],
}


def test_every_suite_has_a_verify_subcommand():
    from main import build_parser

    c, _ = _controller()
    parser = build_parser()
    assert set(c.verification.suite_names) == set(SUITE_ARGS)
    for name in c.verification.suite_names:
        assert parser.parse_args(["verify", name] + SUITE_ARGS[name]).suite == name
