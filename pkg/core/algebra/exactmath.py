# core/algebra/exactmath.py
"""
Exact scalar, polynomial and matrix arithmetic.

Coefficients are rationals everywhere. Laurent polynomials in q and their
quotients carry the deformation parameter; truncated multivariate
polynomials carry characters; sparse matrices carry actions and spans.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ..base import PoleError, VariableMismatch

logger = logging.getLogger(__name__)

BigRational = Fraction
Scalar = Union[int, Fraction]
Exponents = Tuple[int, ...]


def is_zero(value) -> bool:
    return value == 0


class LaurentPoly:
    """Finite sum of c_k q^k with rational c_k and integer k"""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, Scalar]] = None):
        clean: Dict[int, Fraction] = {}
        for exp, coeff in (coeffs or {}).items():
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[int(exp)] = coeff
        self._coeffs = clean

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, exp: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def q(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def coerce(cls, value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f"cannot convert {type(value).__name__} to LaurentPoly")

    @property
    def coefficients(self) -> Dict[int, Fraction]:
        return dict(self._coeffs)

    def coefficient(self, exp: int) -> Fraction:
        return self._coeffs.get(exp, Fraction(0))

    def terms(self) -> List[Tuple[int, Fraction]]:
        return sorted(self._coeffs.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_degree(self) -> int:
        return min(self._coeffs) if self._coeffs else 0

    @property
    def max_degree(self) -> int:
        return max(self._coeffs) if self._coeffs else 0

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[self.max_degree] if self._coeffs else Fraction(0)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k"""
        return LaurentPoly({exp + k: c for exp, c in self._coeffs.items()})

    def evaluate(self, q0: Scalar) -> Fraction:
        q0 = Fraction(q0)
        if q0 == 0 and any(exp < 0 for exp in self._coeffs):
            raise PoleError("negative power of q evaluated at q = 0", {"poly": str(self)})
        return sum((c * q0 ** exp for exp, c in self._coeffs.items()), Fraction(0))

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        result = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            result[exp] = result.get(exp, 0) + c
        return LaurentPoly(result)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({exp: -c for exp, c in self._coeffs.items()})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({exp: c * other for exp, c in self._coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        result: Dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(result)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            if len(self._coeffs) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (exp, c), = self._coeffs.items()
            return LaurentPoly({exp * power: Fraction(c) ** power})
        result = LaurentPoly.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for exp, coeff in self.terms():
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            if exp == 0:
                body = str(magnitude)
            else:
                power = "q" if exp == 1 else f"q^{exp}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


Q = LaurentPoly.q()
Q_INV = LaurentPoly.monomial(-1)
ONE = LaurentPoly.constant(1)
EPSILON = Q - Q_INV


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def quantum_integer(k: int) -> LaurentPoly:
    """Symmetric quantum integer [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}"""
    return LaurentPoly({k - 1 - 2 * i: 1 for i in range(k)})


class RationalFunction:
    """
    Quotient of two Laurent polynomials.

    Stored with the denominator shifted to lowest exponent 0 and scaled to
    leading coefficient 1, so equal denominators compare equal structurally.
    Equality is decided by cross-multiplication.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator=0, denominator=1):
        num = LaurentPoly.coerce(numerator)
        den = LaurentPoly.coerce(denominator)
        if den.is_zero():
            raise PoleError("rational function with zero denominator")
        if num.is_zero():
            den = ONE
        else:
            shift = -den.min_degree
            scale = 1 / den.shift(shift).leading_coefficient
            num = num.shift(shift) * scale
            den = den.shift(shift) * scale
        self.numerator = num
        self.denominator = den

    @classmethod
    def coerce(cls, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        return cls(LaurentPoly.coerce(value))

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_laurent(self) -> bool:
        return self.denominator == ONE

    def evaluate(self, q0: Scalar) -> Fraction:
        den = self.denominator.evaluate(q0)
        if den == 0:
            raise PoleError(f"denominator {self.denominator} vanishes at q = {q0}",
                            {"q0": str(q0), "denominator": str(self.denominator)})
        return self.numerator.evaluate(q0) / den

    def __add__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.denominator == other.denominator:
            return RationalFunction(self.numerator + other.numerator, self.denominator)
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalFunction()
        return RationalFunction(self.numerator * other.numerator,
                                self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            raise PoleError("division by the zero rational function")
        return RationalFunction(self.numerator * other.denominator,
                                self.denominator * other.numerator)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __eq__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.denominator == ONE:
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"


def ratfun_eval(f: RationalFunction, q0: Scalar) -> Fraction:
    return RationalFunction.coerce(f).evaluate(q0)


class TruncatedPoly:
    """Polynomial in nvars variables with every term of total degree <= cap"""

    __slots__ = ("nvars", "cap", "_terms")

    def __init__(self, nvars: int, cap: int, terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        if nvars < 0 or cap < 0:
            raise ValueError("nvars and cap must be nonnegative")
        self.nvars = nvars
        self.cap = cap
        clean: Dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise VariableMismatch(f"exponent vector {exps} has {len(exps)} entries, expected {nvars}")
            if sum(exps) > cap:
                continue
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[exps] = clean.get(exps, 0) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        self._terms = clean

    @classmethod
    def zero(cls, nvars: int, cap: int) -> "TruncatedPoly":
        return cls(nvars, cap)

    @classmethod
    def one(cls, nvars: int, cap: int) -> "TruncatedPoly":
        return cls(nvars, cap, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], cap: int, coeff: Scalar = 1) -> "TruncatedPoly":
        return cls(len(exps), cap, {tuple(exps): coeff})

    @classmethod
    def variable(cls, index: int, nvars: int, cap: int) -> "TruncatedPoly":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, cap, {tuple(exps): 1})

    @classmethod
    def geometric_series(cls, exps: Sequence[int], cap: int) -> "TruncatedPoly":
        """1/(1 - x^exps) expanded below the cap"""
        step = sum(exps)
        if step <= 0:
            raise ValueError("geometric series needs a monomial of positive degree")
        terms = {tuple(k * e for e in exps): 1 for k in range(cap // step + 1)}
        return cls(len(exps), cap, terms)

    @property
    def terms(self) -> Dict[Exponents, Fraction]:
        return dict(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> List[Tuple[Exponents, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: (sum(item[0]), tuple(-e for e in item[0])))

    def graded_coefficients(self) -> List[Fraction]:
        """Coefficient sums per total degree 0..cap (all variables set to t)"""
        graded = [Fraction(0)] * (self.cap + 1)
        for exps, coeff in self._terms.items():
            graded[sum(exps)] += coeff
        return graded

    def degree_slice(self, degree: int) -> "TruncatedPoly":
        return TruncatedPoly(self.nvars, self.cap,
                             {e: c for e, c in self._terms.items() if sum(e) == degree})

    def truncate(self, cap: int) -> "TruncatedPoly":
        return TruncatedPoly(self.nvars, cap, self._terms)

    def embed(self, offset: int, nvars: int) -> "TruncatedPoly":
        """Rename variable i to variable offset + i inside nvars variables"""
        if offset + self.nvars > nvars:
            raise VariableMismatch("embedding does not fit the target variable set")
        terms = {}
        for exps, coeff in self._terms.items():
            full = [0] * nvars
            full[offset:offset + self.nvars] = exps
            terms[tuple(full)] = coeff
        return TruncatedPoly(nvars, self.cap, terms)

    def _check_same_vars(self, other: "TruncatedPoly") -> None:
        if self.nvars != other.nvars:
            raise VariableMismatch(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        self._check_same_vars(other)
        cap = min(self.cap, other.cap)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return TruncatedPoly(self.nvars, cap, terms)

    def __neg__(self):
        return TruncatedPoly(self.nvars, self.cap, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedPoly(self.nvars, self.cap, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return truncated_mul(self, other, min(self.cap, other.cap))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    __hash__ = None

    def __repr__(self):
        return f"TruncatedPoly(nvars={self.nvars}, cap={self.cap}, terms={len(self._terms)})"

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        if not self._terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            monomial = "*".join(factors)
            if not monomial:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = monomial
            else:
                body = f"{abs(coeff)}*{monomial}"
            pieces.append(("-" if coeff < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.format()


def truncated_mul(p1: TruncatedPoly, p2: TruncatedPoly, cap: int) -> TruncatedPoly:
    if p1.nvars != p2.nvars:
        raise VariableMismatch(f"variable counts differ: {p1.nvars} vs {p2.nvars}")
    by_degree: Dict[int, List[Tuple[Exponents, Fraction]]] = {}
    for exps, coeff in p2._terms.items():
        by_degree.setdefault(sum(exps), []).append((exps, coeff))
    result: Dict[Exponents, Fraction] = {}
    for e1, c1 in p1._terms.items():
        d1 = sum(e1)
        for d2, bucket in by_degree.items():
            if d1 + d2 > cap:
                continue
            for e2, c2 in bucket:
                key = tuple(a + b for a, b in zip(e1, e2))
                result[key] = result.get(key, 0) + c1 * c2
    return TruncatedPoly(p1.nvars, cap, result)


class ExactMatrix:
    """
    Sparse rectangular matrix, entries keyed by (row, col).

    Entries are rationals, or Laurent polynomials / rational functions in q
    when symbolic is set.
    """

    __slots__ = ("rows", "cols", "symbolic", "_entries")

    def __init__(self, rows: int, cols: int, entries: Optional[Mapping[Tuple[int, int], object]] = None,
                 symbolic: bool = False):
        self.rows = rows
        self.cols = cols
        self.symbolic = symbolic
        table: Dict[int, Dict[int, object]] = {}
        for (i, j), value in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside a {rows}x{cols} matrix")
            if not symbolic:
                value = Fraction(value)
            if not is_zero(value):
                table.setdefault(i, {})[j] = value
        self._entries = table

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], symbolic: bool = False) -> "ExactMatrix":
        height = len(rows)
        width = len(rows[0]) if rows else 0
        if any(len(row) != width for row in rows):
            raise ValueError("rows have different lengths")
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)}
        return cls(height, width, entries, symbolic)

    @classmethod
    def identity(cls, size: int, symbolic: bool = False) -> "ExactMatrix":
        one = ONE if symbolic else Fraction(1)
        return cls(size, size, {(i, i): one for i in range(size)}, symbolic)

    def get(self, i: int, j: int):
        return self._entries.get(i, {}).get(j, 0)

    def row(self, i: int) -> Dict[int, object]:
        return dict(self._entries.get(i, {}))

    def row_vectors(self) -> List[Dict[int, object]]:
        return [self.row(i) for i in range(self.rows)]

    def items(self):
        for i in sorted(self._entries):
            for j in sorted(self._entries[i]):
                yield (i, j), self._entries[i][j]

    def nonzero_count(self) -> int:
        return sum(len(row) for row in self._entries.values())

    def is_zero(self) -> bool:
        return not self._entries

    def _combine(self, other: "ExactMatrix", sign: int) -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix dimensions differ")
        entries = {key: value for key, value in self.items()}
        for key, value in other.items():
            entries[key] = entries.get(key, 0) + sign * value
        return ExactMatrix(self.rows, self.cols, entries, self.symbolic or other.symbolic)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, factor) -> "ExactMatrix":
        symbolic = self.symbolic or not isinstance(factor, (int, Fraction))
        return ExactMatrix(self.rows, self.cols,
                           {key: value * factor for key, value in self.items()}, symbolic)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        entries: Dict[Tuple[int, int], object] = {}
        for i, row in self._entries.items():
            for k, a in row.items():
                for j, b in other._entries.get(k, {}).items():
                    entries[(i, j)] = entries.get((i, j), 0) + a * b
        return ExactMatrix(self.rows, other.cols, entries, self.symbolic or other.symbolic)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.items()}, self.symbolic)

    def evaluate(self, q0: Scalar) -> "ExactMatrix":
        """Specialize symbolic entries at q = q0"""
        if not self.symbolic:
            return self
        return ExactMatrix(self.rows, self.cols,
                           {key: _evaluate_entry(value, q0) for key, value in self.items()})

    def flatten(self) -> Dict[int, object]:
        return {i * self.cols + j: value for (i, j), value in self.items()}

    def first_difference(self, other: "ExactMatrix") -> Optional[Tuple[int, int, object, object]]:
        keys = sorted({key for key, _ in self.items()} | {key for key, _ in other.items()})
        for i, j in keys:
            a, b = self.get(i, j), other.get(i, j)
            if not is_zero(a - b):
                return i, j, a, b
        return None

    def rank(self) -> int:
        return matrix_rank(self)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return self.first_difference(other) is None

    __hash__ = None

    def __repr__(self):
        kind = "symbolic" if self.symbolic else "rational"
        return f"ExactMatrix({self.rows}x{self.cols}, {kind}, nnz={self.nonzero_count()})"


def _evaluate_entry(value, q0: Scalar) -> Fraction:
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return value.evaluate(q0)


def _is_rational(value) -> bool:
    return isinstance(value, (int, Fraction))


def _rational_rank(vectors: Sequence[Mapping[int, object]], cols: int) -> int:
    rows = {}
    for i, vec in enumerate(vectors):
        row = {j: QQ(Fraction(v).numerator, Fraction(v).denominator) for j, v in vec.items() if v != 0}
        if row:
            rows[len(rows)] = row
    if not rows or cols == 0:
        return 0
    return DomainMatrix(rows, (len(rows), cols), QQ).rank()


def _fraction_free_rank(vectors: Sequence[Mapping[int, object]], cols: int) -> int:
    """Rank over the fraction field by division-free elimination, pivoting in column order"""
    rows = [dict(vec) for vec in vectors]
    rows = [{j: v for j, v in row.items() if not is_zero(v)} for row in rows]
    rows = [row for row in rows if row]
    rank = 0
    for col in range(cols):
        pivot_index = next((k for k, row in enumerate(rows) if col in row), None)
        if pivot_index is None:
            continue
        pivot = rows.pop(pivot_index)
        p = pivot[col]
        rank += 1
        reduced = []
        for row in rows:
            a = row.get(col)
            if a is not None:
                keys = set(row) | set(pivot)
                row = {k: p * row.get(k, 0) - a * pivot.get(k, 0) for k in keys}
                row = {k: v for k, v in row.items() if not is_zero(v)}
            if row:
                reduced.append(row)
        rows = reduced
        if not rows:
            break
    return rank


def vectors_rank(vectors: Sequence[Mapping[int, object]], cols: int) -> int:
    """Exact rank of sparse row vectors of length cols"""
    if all(_is_rational(v) for vec in vectors for v in vec.values()):
        return _rational_rank(vectors, cols)
    return _fraction_free_rank(vectors, cols)


def matrix_rank(matrix: ExactMatrix) -> int:
    rank = vectors_rank(matrix.row_vectors(), matrix.cols)
    logger.debug("rank of %dx%d matrix: %d", matrix.rows, matrix.cols, rank)
    return rank


def span_contains(basis: Sequence[Mapping[int, object]], candidates: Iterable[Mapping[int, object]],
                  cols: int) -> bool:
    """True iff every candidate lies in the row span of basis"""
    candidates = list(candidates)
    if not candidates:
        return True
    return vectors_rank(list(basis) + candidates, cols) == vectors_rank(basis, cols)


def spans_equal(first: Sequence[Mapping[int, object]], second: Sequence[Mapping[int, object]],
                cols: int) -> bool:
    rank_first = vectors_rank(first, cols)
    if rank_first != vectors_rank(second, cols):
        return False
    return vectors_rank(list(first) + list(second), cols) == rank_first
