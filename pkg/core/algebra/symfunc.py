# core/algebra/symfunc.py
"""
Schur, skew Schur and hook Schur polynomials by tableau enumeration, and
exact truncated checks of the Schur identity and its hook generalization.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..base import ContainmentError, Stopwatch, VerificationReport, make_check
from .exactmath import TruncatedPoly
from .shapes import (
    Partition, conjugate, enumerate_ssyt, hook_partitions, partitions_of, partitions_up_to, weight,
)

logger = logging.getLogger(__name__)


class CharacterPoly:
    """Truncated polynomial in m even variables x1..xm followed by n odd variables y1..yn"""

    __slots__ = ("m", "n", "poly")

    def __init__(self, m: int, n: int, poly: TruncatedPoly):
        if poly.nvars != m + n:
            raise ValueError(f"polynomial has {poly.nvars} variables, expected {m + n}")
        self.m = m
        self.n = n
        self.poly = poly

    @classmethod
    def zero(cls, m: int, n: int, cap: int) -> "CharacterPoly":
        return cls(m, n, TruncatedPoly.zero(m + n, cap))

    @classmethod
    def one(cls, m: int, n: int, cap: int = 0) -> "CharacterPoly":
        return cls(m, n, TruncatedPoly.one(m + n, cap))

    @property
    def cap(self) -> int:
        return self.poly.cap

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.poly.coefficient(exps)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def graded(self) -> List[int]:
        return specialize_graded(self)

    def variable_names(self) -> List[str]:
        if self.n == 0:
            return [f"x{i}" for i in range(1, self.m + 1)] if self.m > 1 else ["x"] * self.m
        if self.m <= 1 and self.n <= 1:
            return ["x"] * self.m + ["y"] * self.n
        return [f"x{i}" for i in range(1, self.m + 1)] + [f"y{i}" for i in range(1, self.n + 1)]

    def has_nonnegative_integer_coefficients(self) -> bool:
        return all(c >= 0 and c.denominator == 1 for c in self.poly.terms.values())

    def __add__(self, other: "CharacterPoly") -> "CharacterPoly":
        return CharacterPoly(self.m, self.n, self.poly + other.poly)

    def __eq__(self, other):
        if not isinstance(other, CharacterPoly):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.poly == other.poly

    __hash__ = None

    def __repr__(self):
        return f"CharacterPoly({self.m}|{self.n}: {self})"

    def __str__(self):
        return self.poly.format(self.variable_names())


def _weight_sum(tableaux, m: int, n: int, cap: int) -> TruncatedPoly:
    terms: Dict[Tuple[int, ...], int] = {}
    for tableau in tableaux:
        key = weight(tableau, m, n)
        terms[key] = terms.get(key, 0) + 1
    return TruncatedPoly(m + n, cap, terms)


def schur(shape: Partition, m: int) -> CharacterPoly:
    """Ordinary Schur polynomial s_lambda(x1..xm); zero when lambda has more than m rows"""
    tableaux = enumerate_ssyt(shape, m, 0)
    return CharacterPoly(m, 0, _weight_sum(tableaux, m, 0, shape.size))


def _skew_fillings(outer: Partition, inner: Partition, k: int) -> Iterator[List[int]]:
    cells = [(i, j) for i in range(len(outer)) for j in range(inner.part(i), outer.part(i))]
    filled: Dict[Tuple[int, int], int] = {}

    def place(pos: int):
        if pos == len(cells):
            yield [filled[cell] for cell in cells]
            return
        i, j = cells[pos]
        low = 1
        if (i, j - 1) in filled:
            low = max(low, filled[(i, j - 1)])
        if (i - 1, j) in filled:
            low = max(low, filled[(i - 1, j)] + 1)
        for value in range(low, k + 1):
            filled[(i, j)] = value
            yield from place(pos + 1)
        filled.pop((i, j), None)

    yield from place(0)


def skew_schur(outer: Partition, inner: Partition, k: int) -> CharacterPoly:
    """s_{lambda/mu}(x1..xk) over semistandard fillings of the skew shape"""
    if not outer.contains(inner):
        raise ContainmentError(f"{inner} is not contained in {outer}",
                               {"outer": list(outer.parts), "inner": list(inner.parts)})
    cap = outer.size - inner.size
    terms: Dict[Tuple[int, ...], int] = {}
    for values in _skew_fillings(outer, inner, k):
        exps = [0] * k
        for value in values:
            exps[value - 1] += 1
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + 1
    return CharacterPoly(k, 0, TruncatedPoly(k, cap, terms))


def hook_schur_ssyt(shape: Partition, m: int, n: int) -> CharacterPoly:
    """Weight generating function of the SSYT of the shape over m|n"""
    return CharacterPoly(m, n, _weight_sum(enumerate_ssyt(shape, m, n), m, n, shape.size))


def subpartitions(shape: Partition) -> List[Partition]:
    """All mu contained in lambda, including the empty partition and lambda itself"""
    result = []

    def extend(row: int, bound: int, prefix: Tuple[int, ...]):
        result.append(Partition(prefix))
        if row >= len(shape):
            return
        for part in range(min(bound, shape.part(row)), 0, -1):
            extend(row + 1, part, prefix + (part,))

    extend(0, shape.part(0), ())
    return result


def hook_schur_factorized(shape: Partition, m: int, n: int) -> CharacterPoly:
    """Sum over mu in lambda of s_mu(x1..xm) * s_{lambda'/mu'}(y1..yn)"""
    nvars = m + n
    cap = shape.size
    total = TruncatedPoly.zero(nvars, cap)
    dual = conjugate(shape)
    for inner in subpartitions(shape):
        even_part = schur(inner, m)
        if even_part.is_zero():
            continue
        odd_part = skew_schur(dual, conjugate(inner), n)
        if odd_part.is_zero():
            continue
        left = even_part.poly.embed(0, nvars).truncate(cap)
        right = odd_part.poly.embed(m, nvars).truncate(cap)
        total = total + left * right
    return CharacterPoly(m, n, total)


def specialize_graded(character: CharacterPoly) -> List[int]:
    """Set every variable to t and read off the coefficient of each power of t"""
    return [int(c) for c in character.poly.graded_coefficients()]


def _first_discrepancy(lhs: TruncatedPoly, rhs: TruncatedPoly) -> Optional[Dict[str, object]]:
    keys = sorted(set(lhs.terms) | set(rhs.terms), key=lambda e: (sum(e), tuple(-x for x in e)))
    for exps in keys:
        a, b = lhs.coefficient(exps), rhs.coefficient(exps)
        if a != b:
            return {"exponents": list(exps), "lhs": str(a), "rhs": str(b)}
    return None


def schur_identity_lhs(m: int, cap: int) -> TruncatedPoly:
    product = TruncatedPoly.one(m, cap)
    for i in range(m):
        exps = [0] * m
        exps[i] = 1
        product = product * TruncatedPoly.geometric_series(exps, cap)
    for i in range(m):
        for j in range(i + 1, m):
            exps = [0] * m
            exps[i] = exps[j] = 1
            product = product * TruncatedPoly.geometric_series(exps, cap)
    return product


def hook_identity_lhs(m: int, n: int, cap: int) -> TruncatedPoly:
    """Mixed pairs give (1 + x_i x_j); single variables and same-parity pairs give geometric factors"""
    nvars = m + n
    parities = [0] * m + [1] * n
    product = TruncatedPoly.one(nvars, cap)
    for i in range(nvars):
        exps = [0] * nvars
        exps[i] = 1
        product = product * TruncatedPoly.geometric_series(exps, cap)
    for i in range(nvars):
        for j in range(i + 1, nvars):
            exps = [0] * nvars
            exps[i] = exps[j] = 1
            if parities[i] != parities[j]:
                factor = TruncatedPoly.one(nvars, cap) + TruncatedPoly.monomial(exps, cap)
            else:
                factor = TruncatedPoly.geometric_series(exps, cap)
            product = product * factor
    return product


def hook_schur_sum(m: int, n: int, cap: int) -> TruncatedPoly:
    total = TruncatedPoly.zero(m + n, cap)
    for r in range(cap + 1):
        for shape in hook_partitions(r, m, n):
            total = total + hook_schur_ssyt(shape, m, n).poly.truncate(cap)
    return total


def schur_identity_check(m: int, cap: int) -> VerificationReport:
    parameters = {"m": m, "maxDegree": cap}
    report = VerificationReport(parameters=parameters)
    watch = Stopwatch()
    lhs = schur_identity_lhs(m, cap)
    rhs = TruncatedPoly.zero(m, cap)
    for shape in partitions_up_to(cap):
        if len(shape) <= m:
            rhs = rhs + schur(shape, m).poly.truncate(cap)
    discrepancy = _first_discrepancy(lhs, rhs)
    logger.info("Schur identity m=%d cap=%d: %s", m, cap, "equal" if discrepancy is None else "unequal")
    report.add(make_check("schur-identity", parameters, discrepancy is None, {
        "terms": len(lhs.terms),
        "gradedLhs": [int(c) for c in lhs.graded_coefficients()],
        "gradedRhs": [int(c) for c in rhs.graded_coefficients()],
        "firstDiscrepancy": discrepancy,
    }, watch.elapsed_ms))
    return report


def hook_identity_check(m: int, n: int, cap: int) -> VerificationReport:
    parameters = {"m": m, "n": n, "maxDegree": cap}
    report = VerificationReport(parameters=parameters)
    watch = Stopwatch()
    lhs = hook_identity_lhs(m, n, cap)
    rhs = hook_schur_sum(m, n, cap)
    discrepancy = _first_discrepancy(lhs, rhs)
    logger.info("hook Schur identity %d|%d cap=%d: %s", m, n, cap,
                "equal" if discrepancy is None else "unequal")
    report.add(make_check("hook-identity", parameters, discrepancy is None, {
        "terms": len(lhs.terms),
        "gradedLhs": [int(c) for c in lhs.graded_coefficients()],
        "gradedRhs": [int(c) for c in rhs.graded_coefficients()],
        "firstDiscrepancy": discrepancy,
    }, watch.elapsed_ms))
    return report


def verify_character_routes(m: int, n: int, max_size: int) -> VerificationReport:
    """Tableau route and factorized route give the same hook Schur polynomial"""
    parameters = {"m": m, "n": n, "maxSize": max_size}
    report = VerificationReport(parameters=parameters)
    watch = Stopwatch()
    mismatches = []
    compared = 0
    for r in range(max_size + 1):
        for shape in partitions_of(r):
            compared += 1
            if hook_schur_ssyt(shape, m, n) != hook_schur_factorized(shape, m, n):
                mismatches.append(str(shape))
    report.add(make_check("character-routes", parameters, not mismatches,
                          {"shapes": compared, "mismatches": mismatches}, watch.elapsed_ms))
    return report
