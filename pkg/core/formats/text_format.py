# core/formats/text_format.py

import json
import logging
import re
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from ..algebra.heckerep import HeckeElement
from ..algebra.freealg import TensorElement
from ..algebra.shapes import SSYT, Partition, SignedLetter, SignedWord
from ..algebra.symfunc import CharacterPoly
from ..base import ParseError, ShapeError

logger = logging.getLogger(__name__)

_LETTER_RE = re.compile(r"^([1-9][0-9]*)('?)$")
_RATIONAL_RE = re.compile(r"^(-?[0-9]+)(?:/([0-9]+))?$")

LETTER_GRAMMAR = "letter := positive integer, apostrophe marks odd (1, 2, 1')"
WORD_GRAMMAR = "word := letters separated by commas (1,1',2)"
SHAPE_GRAMMAR = "shape := weakly decreasing positive parts separated by commas (2,1)"
RATIONAL_GRAMMAR = "rational := p or p/q with integer p and positive q (7/3)"
TABLEAU_GRAMMAR = "tableau := words separated by '/', top row first (1,1/1'), or JSON {\"rows\": [...]}"


def parse_letter(text: str) -> SignedLetter:
    match = _LETTER_RE.match(text.strip())
    if not match:
        raise ParseError(f"invalid letter {text!r}; {LETTER_GRAMMAR}")
    index = int(match.group(1))
    return SignedLetter.odd(index) if match.group(2) else SignedLetter.even(index)


def format_letter(letter: SignedLetter) -> str:
    return str(letter)


def parse_word(text: str) -> SignedWord:
    """Пустая строка - пустое слово"""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(parse_letter(part) for part in text.split(","))
    except ParseError:
        raise ParseError(f"invalid word {text!r}; {WORD_GRAMMAR}")


def format_word(word: Sequence[SignedLetter]) -> str:
    return ",".join(format_letter(letter) for letter in word)


def parse_shape(text: str) -> Partition:
    text = text.strip()
    if not text or text in ("0", "∅"):
        return Partition(())
    parts = text.split(",")
    if not all(part.strip().isdigit() for part in parts):
        raise ParseError(f"invalid shape {text!r}; {SHAPE_GRAMMAR}")
    try:
        return Partition(tuple(int(part) for part in parts))
    except ShapeError as e:
        raise ParseError(f"invalid shape {text!r}: {e.message}")


def format_shape(shape: Partition) -> str:
    return ",".join(str(p) for p in shape.parts)


def parse_rational(text: str) -> Fraction:
    match = _RATIONAL_RE.match(text.strip())
    if not match or (match.group(2) is not None and int(match.group(2)) == 0):
        raise ParseError(f"invalid rational {text!r}; {RATIONAL_GRAMMAR}")
    return Fraction(int(match.group(1)), int(match.group(2) or 1))


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


# Таблицы

def tableau_to_json(tableau: SSYT) -> Dict[str, Any]:
    return {
        "shape": list(tableau.shape.parts),
        "rows": [[str(letter) for letter in row] for row in tableau.rows],
    }


def tableau_from_json(data: Dict[str, Any]) -> SSYT:
    """Проверяет форму и условия на строки и столбцы"""
    try:
        rows = [[parse_letter(str(x)) for x in row] for row in data["rows"]]
    except (KeyError, TypeError):
        raise ParseError(f"tableau JSON needs a list of rows; {TABLEAU_GRAMMAR}")
    try:
        tableau = SSYT.from_rows(rows)
    except ShapeError as e:
        raise ParseError(f"invalid tableau: {e.message}", e.details)
    if "shape" in data and list(data["shape"]) != list(tableau.shape.parts):
        raise ParseError(f"shape {data['shape']} does not match rows of lengths {list(tableau.shape.parts)}")
    return tableau


def parse_tableau(text: str) -> SSYT:
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid tableau JSON: {e}")
        return tableau_from_json(data)
    if not text or text == "∅":
        return SSYT.empty()
    rows = [list(parse_word(row)) for row in text.split("/")]
    if any(not row for row in rows):
        raise ParseError(f"empty row in tableau {text!r}; {TABLEAU_GRAMMAR}")
    return tableau_from_json({"rows": [[str(x) for x in row] for row in rows]})


def format_tableau(tableau: SSYT) -> str:
    if not tableau.rows:
        return "∅"
    return "/".join(format_word(row) for row in tableau.rows)


# Многочлены и элементы алгебр

def character_to_json(character: CharacterPoly) -> Dict[str, Any]:
    return {
        "m": character.m,
        "n": character.n,
        "variables": character.variable_names(),
        "terms": [
            {"exponents": list(exps), "coefficient": format_rational(coeff)}
            for exps, coeff in character.poly.sorted_terms()
        ],
        "graded": character.graded(),
    }


def tensor_to_json(element: TensorElement) -> List[Dict[str, Any]]:
    return [
        {
            "word": [str(letter) for letter in word],
            "coefficient": {"num": str(coeff.numerator), "den": str(coeff.denominator)},
        }
        for word, coeff in element.sorted_terms()
    ]


def hecke_to_json(element: HeckeElement) -> Dict[str, Any]:
    return {
        "r": element.r,
        "terms": [{"perm": list(w.images), "coeff": str(c)} for w, c in element.sorted_terms()],
    }


def dump_json(data: Any) -> str:
    """Детерминированный JSON для отчетов и вывода команд"""
    return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=False)
