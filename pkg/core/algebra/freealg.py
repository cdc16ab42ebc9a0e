# core/algebra/freealg.py
"""
Free tensor superalgebra T(V) on the signed alphabet: deformed superbrackets,
the degree-3 generators of the relation ideal, ideal spans, quotient
dimensions and the PBW Hilbert series.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from ..base import (
    BracketConvention, InhomogeneousError, Stopwatch, VerificationReport, check_size, make_check,
)
from ..settings import DEFAULT_SETTINGS
from .exactmath import Q_INV, RationalFunction, TruncatedPoly, spans_equal, span_contains, vectors_rank
from .plactic import enumerate_classes
from .shapes import (
    SSYT, Partition, SignedLetter, SignedWord, alphabet, count_standard, enumerate_ssyt, hook_partitions,
    partitions_of, ssyt_count, weight, word_key, word_parity,
)
from .symfunc import hook_schur_ssyt

logger = logging.getLogger(__name__)

Coefficient = Union[int, Fraction, RationalFunction]
SparseVector = Dict[int, Fraction]

ADJOINT_SHAPE = Partition((2, 1))


class TensorElement:
    """Finite linear combination of basis words with rational-function coefficients"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Sequence[SignedLetter], Coefficient]] = None):
        clean: Dict[SignedWord, RationalFunction] = {}
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            coeff = RationalFunction.coerce(coeff)
            if word in clean:
                coeff = clean[word] + coeff
            if coeff.is_zero():
                clean.pop(word, None)
            else:
                clean[word] = coeff
        self._terms = clean

    @classmethod
    def letter(cls, letter: SignedLetter) -> "TensorElement":
        return cls({(letter,): 1})

    @classmethod
    def word(cls, word: Sequence[SignedLetter], coeff: Coefficient = 1) -> "TensorElement":
        return cls({tuple(word): coeff})

    @property
    def terms(self) -> Dict[SignedWord, RationalFunction]:
        return dict(self._terms)

    def coefficient(self, word: Sequence[SignedLetter]) -> RationalFunction:
        return self._terms.get(tuple(word), RationalFunction())

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> List[Tuple[SignedWord, RationalFunction]]:
        return sorted(self._terms.items(), key=lambda item: word_key(item[0]))

    def degree(self) -> int:
        """Common word length; zero for the zero element"""
        lengths = {len(word) for word in self._terms}
        if len(lengths) > 1:
            raise InhomogeneousError(f"element mixes word lengths {sorted(lengths)}")
        return lengths.pop() if lengths else 0

    def parity(self) -> int:
        parities = {word_parity(word) for word in self._terms}
        if len(parities) > 1:
            raise InhomogeneousError("element mixes even and odd words")
        return parities.pop() if parities else 0

    def scale(self, factor: Coefficient) -> "TensorElement":
        factor = RationalFunction.coerce(factor)
        return TensorElement({word: coeff * factor for word, coeff in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        terms: Dict[SignedWord, RationalFunction] = dict(self._terms)
        for word, coeff in other._terms.items():
            terms[word] = terms[word] + coeff if word in terms else coeff
        return TensorElement(terms)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Concatenation product, or scaling by a coefficient"""
        if isinstance(other, TensorElement):
            terms: Dict[SignedWord, RationalFunction] = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    key = w1 + w2
                    value = c1 * c2
                    terms[key] = terms[key] + value if key in terms else value
            return TensorElement(terms)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def evaluate(self, q0, m: int, n: int) -> SparseVector:
        """Coefficient vector at q = q0, indexed by the lexicographic position of each word"""
        vector: SparseVector = {}
        for word, coeff in self._terms.items():
            value = coeff.evaluate(q0)
            if value != 0:
                vector[word_index(word, m, n)] = value
        return vector

    def __repr__(self):
        return f"TensorElement({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({coeff})*{''.join(str(x) for x in word)}" for word, coeff in self.sorted_terms())


@dataclass(frozen=True)
class GammaElement:
    """A degree-3 generator of the deformed ideal, tagged by the shape-(2,1) tableau it indexes"""
    family: int
    tableau: SSYT
    element: TensorElement = field(compare=False)


@dataclass
class GradedDims:
    """Dimensions per degree, starting with the scalars"""
    dims: List[int]

    def __post_init__(self):
        if not self.dims or self.dims[0] != 1:
            raise ValueError("graded dimensions must start with 1")
        if any(d < 0 for d in self.dims):
            raise ValueError("graded dimensions must be nonnegative")

    def __getitem__(self, degree: int) -> int:
        return self.dims[degree]

    def __len__(self):
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)


def word_index(word: Sequence[SignedLetter], m: int, n: int) -> int:
    """Position of the word among all words of its length in lexicographic order"""
    base = m + n
    index = 0
    for letter in word:
        index = index * base + letter.rank(m) - 1
    return index


def words_of_length(m: int, n: int, r: int) -> Iterator[SignedWord]:
    return product(alphabet(m, n), repeat=r)


def _sign(u: int, v: int) -> int:
    return -1 if u and v else 1


def qbracket(u: TensorElement, v: TensorElement, c: Coefficient = 1,
             convention: BracketConvention = BracketConvention.SECOND_TERM) -> TensorElement:
    """u v - (-1)^(u^ v^) c v u, or with c on the first term for FIRST_TERM"""
    sign = _sign(u.parity(), v.parity())
    if convention == BracketConvention.FIRST_TERM:
        return (u * v).scale(c) - (v * u).scale(sign)
    return u * v - (v * u).scale(RationalFunction.coerce(c) * sign)


def bracket(u: TensorElement, v: TensorElement) -> TensorElement:
    return qbracket(u, v, 1)


def double_bracket_basis(m: int, n: int) -> List[TensorElement]:
    """Nonzero [a_i, [a_j, a_k]] over all letter triples"""
    letters = [TensorElement.letter(a) for a in alphabet(m, n)]
    result = []
    for x, y, z in product(letters, repeat=3):
        element = bracket(x, bracket(y, z))
        if not element.is_zero():
            result.append(element)
    return result


# families with a repeated letter carry the parameter on the second term
REPEATED_PLACEMENT = BracketConvention.SECOND_TERM


def strict_triples(m: int, n: int) -> List[Tuple[SignedLetter, SignedLetter, SignedLetter]]:
    return list(combinations(alphabet(m, n), 3))


def strict_placement(x: SignedLetter, y: SignedLetter, z: SignedLetter) -> BracketConvention:
    """
    Placement of q^-2 in the two generators of a triple x < y < z.

    First term when the pairs (x, y) and (y, z) carry the same swap sign,
    second term otherwise, which happens only for x even with y, z odd.
    """
    if _sign(x.parity, y.parity) == _sign(y.parity, z.parity):
        return BracketConvention.FIRST_TERM
    return BracketConvention.SECOND_TERM


def gamma_elements(m: int, n: int, convention: Optional[BracketConvention] = None) -> List[GammaElement]:
    """
    The six families of degree-3 generators of the deformed relation ideal.

    Letters are taken by their position in the ordered alphabet. Three
    distinct letters i1 < i2 < i3 give two elements; a repeated letter gives
    one element whose family depends on its parity. Each element carries the
    (2,1) tableau it indexes, so the list has one entry per such tableau.
    A convention forces every family to the same parameter placement.
    """
    letters = alphabet(m, n)
    a = {letter: TensorElement.letter(letter) for letter in letters}
    q_inv2 = Q_INV * Q_INV
    repeated = convention or REPEATED_PLACEMENT

    def tag(family: int, top: Sequence[SignedLetter], bottom: Sequence[SignedLetter],
            element: TensorElement) -> GammaElement:
        return GammaElement(family, SSYT.from_rows([list(top), list(bottom)]), element)

    result: List[GammaElement] = []
    for x, y, z in strict_triples(m, n):
        place = convention or strict_placement(x, y, z)
        first = (qbracket(a[y], bracket(a[z], a[x]), q_inv2, place)
                 + bracket(a[z], bracket(a[x], a[y])).scale(Q_INV))
        result.append(tag(1, (x, z), (y,), first))
        second = (qbracket(bracket(a[z], a[x]), a[y], q_inv2, place)
                  + bracket(bracket(a[y], a[z]), a[x]).scale(Q_INV))
        result.append(tag(2, (x, y), (z,), second))
    for p, x in enumerate(letters):
        for y in letters[p + 1:]:
            # x < y with y repeated
            if y.is_odd:
                element = qbracket(bracket(a[x], a[y]), a[y], Q_INV, repeated)
                result.append(tag(3, (x, y), (y,), element))
            else:
                element = qbracket(a[y], bracket(a[x], a[y]), Q_INV, repeated)
                result.append(tag(4, (x, y), (y,), element))
            # x < y with x repeated
            if x.is_odd:
                element = qbracket(a[x], bracket(a[x], a[y]), Q_INV, repeated)
                result.append(tag(5, (x, y), (x,), element))
            else:
                element = qbracket(bracket(a[x], a[y]), a[x], Q_INV, repeated)
                result.append(tag(6, (x, x), (y,), element))
    result.sort(key=lambda g: word_key(g.tableau.letters()))
    return result


def _generator_vectors(m: int, n: int, q0) -> List[SparseVector]:
    if q0 is None:
        return [g.evaluate(1, m, n) for g in double_bracket_basis(m, n)]
    return [g.element.evaluate(q0, m, n) for g in gamma_elements(m, n)]


def ideal_component_dim(m: int, n: int, r: int, q0=None) -> int:
    """
    Rank of the degree-r part of the ideal generated in degree 3.

    q0 None uses the classical double brackets; otherwise the deformed
    generators are specialized at q = q0.
    """
    if r < 3:
        return 0
    base = m + n
    size = base ** r
    check_size("ideal component", size, DEFAULT_SETTINGS.max_ideal_words)
    generators = [vec for vec in _generator_vectors(m, n, q0) if vec]
    vectors: List[SparseVector] = []
    for left in range(r - 2):
        right = r - 3 - left
        for prefix in range(base ** left):
            for suffix in range(base ** right):
                offset = prefix * base ** (3 + right) + suffix
                for vec in generators:
                    vectors.append({offset + k * base ** right: v for k, v in vec.items()})
    rank = vectors_rank(vectors, size)
    logger.info("ideal component %d|%d r=%d q=%s: %d spanning vectors, rank %d",
                m, n, r, "classical" if q0 is None else q0, len(vectors), rank)
    return rank


def quotient_dim(m: int, n: int, r: int, q0=None) -> int:
    if r < 0:
        raise ValueError("degree must be nonnegative")
    return (m + n) ** r - ideal_component_dim(m, n, r, q0)


def hilbert_series(m: int, n: int, cap: int) -> GradedDims:
    """Graded dimensions of S(V) (x) S([V,V]) through degree cap"""
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    one = TruncatedPoly.one(1, cap)
    series = one
    for _ in range(n):
        series = series * (one + TruncatedPoly.monomial([1], cap))
    for _ in range(m * n):
        series = series * (one + TruncatedPoly.monomial([2], cap))
    for _ in range(m):
        series = series * TruncatedPoly.geometric_series([1], cap)
    for _ in range(comb(m, 2) + comb(n + 1, 2)):
        series = series * TruncatedPoly.geometric_series([2], cap)
    return GradedDims([int(c) for c in series.graded_coefficients()])


def symmetric_power_series(m: int, n: int, cap: int) -> GradedDims:
    """(1+t)^n / (1-t)^m, the graded dimensions of the super symmetric algebra on V"""
    one = TruncatedPoly.one(1, cap)
    series = one
    for _ in range(n):
        series = series * (one + TruncatedPoly.monomial([1], cap))
    for _ in range(m):
        series = series * TruncatedPoly.geometric_series([1], cap)
    return GradedDims([int(c) for c in series.graded_coefficients()])


def ssyt_total(m: int, n: int, r: int) -> int:
    return sum(ssyt_count(shape, m, n) for shape in partitions_of(r))


def verify_decomposition(m: int, n: int, rmax: int, q0=None) -> VerificationReport:
    """Quotient dimensions, Hilbert series, tableau counts and plactic classes agree degree by degree"""
    q0 = DEFAULT_SETTINGS.q0 if q0 is None else q0
    parameters = {"m": m, "n": n, "rmax": rmax, "q": str(q0)}
    report = VerificationReport(parameters=parameters)
    watch = Stopwatch()
    hilbert = hilbert_series(m, n, rmax)
    table = []
    ok = True
    for r in range(rmax + 1):
        row = {
            "r": r,
            "quotientClassical": quotient_dim(m, n, r),
            "quotientDeformed": quotient_dim(m, n, r, q0),
            "hilbert": hilbert[r],
            "ssyt": ssyt_total(m, n, r),
            "placticClasses": len(enumerate_classes(m, n, r)),
        }
        row["agree"] = len({v for k, v in row.items() if k not in ("r", "agree")}) == 1
        ok = ok and row["agree"]
        table.append(row)
    report.add(make_check("decomposition", parameters, ok, {"table": table}, watch.elapsed_ms))
    return report


def verify_super_jacobi(m: int, n: int) -> VerificationReport:
    parameters = {"m": m, "n": n}
    report = VerificationReport(parameters=parameters)
    watch = Stopwatch()
    failures = []
    triples = 0
    for x, y, z in product(alphabet(m, n), repeat=3):
        triples += 1
        ex, ey, ez = (TensorElement.letter(v) for v in (x, y, z))
        px, py, pz = x.parity, y.parity, z.parity
        total = (bracket(ex, bracket(ey, ez))
                 + bracket(ey, bracket(ez, ex)).scale(_sign(px, py) * _sign(px, pz))
                 + bracket(ez, bracket(ex, ey)).scale(_sign(px, pz) * _sign(py, pz)))
        if not total.is_zero():
            failures.append(",".join(str(v) for v in (x, y, z)))
    report.add(make_check("super-jacobi", parameters, not failures,
                          {"triples": triples, "failures": failures[:10]}, watch.elapsed_ms))
    return report


def verify_gamma_span(m: int, n: int, q0=None) -> VerificationReport:
    """Generator counts and ranks at q0 and at 1, and the classical span against the double brackets"""
    q0 = DEFAULT_SETTINGS.q0 if q0 is None else q0
    parameters = {"m": m, "n": n, "q": str(q0)}
    report = VerificationReport(parameters=parameters)
    watch = Stopwatch()
    cols = (m + n) ** 3
    expected = ssyt_count(ADJOINT_SHAPE, m, n)
    gammas = gamma_elements(m, n)
    generic = [g.element.evaluate(q0, m, n) for g in gammas]
    classical = [g.element.evaluate(1, m, n) for g in gammas]
    brackets = [g.evaluate(1, m, n) for g in double_bracket_basis(m, n)]
    generic_rank = vectors_rank(generic, cols)
    classical_rank = vectors_rank(classical, cols)
    report.add(make_check("gamma-count", parameters, len(gammas) == expected,
                          {"elements": len(gammas), "ssyt": expected}))
    report.add(make_check("gamma-rank-generic", parameters, generic_rank == expected,
                          {"rank": generic_rank, "ssyt": expected}))
    report.add(make_check("gamma-rank-classical", parameters, classical_rank == expected,
                          {"rank": classical_rank, "ssyt": expected}))
    same = spans_equal(classical, brackets, cols)
    report.add(make_check("gamma-classical-span", parameters, same, {
        "gammaInBrackets": span_contains(brackets, classical, cols),
        "bracketsInGamma": span_contains(classical, brackets, cols),
        "bracketRank": vectors_rank(brackets, cols),
    }, watch.elapsed_ms))
    return report


def multilinear_component_count(r: int) -> int:
    """Tableaux of weight (1, ..., 1) over r even letters, summed over shapes of size r"""
    target = (1,) * r
    total = 0
    for shape in partitions_of(r):
        total += sum(1 for t in enumerate_ssyt(shape, r, 0) if weight(t, r, 0) == target)
    return total


def involution_count(r: int) -> int:
    previous, current = 1, 1
    for k in range(2, r + 1):
        previous, current = current, current + (k - 1) * previous
    return current if r > 0 else 1


def verify_multilinear(rmax: int) -> VerificationReport:
    parameters = {"rmax": rmax}
    report = VerificationReport(parameters=parameters)
    watch = Stopwatch()
    rows = []
    for r in range(1, rmax + 1):
        rows.append({
            "r": r,
            "ssyt": multilinear_component_count(r),
            "standard": sum(count_standard(shape) for shape in partitions_of(r)),
            "involutions": involution_count(r),
        })
    ok = all(row["ssyt"] == row["standard"] == row["involutions"] for row in rows)
    report.add(make_check("multilinear", parameters, ok, {"table": rows}, watch.elapsed_ms))
    return report


def verify_character_dimensions(m: int, n: int, cap: int) -> VerificationReport:
    """Hook Schur characters at x_i = t against the Hilbert and symmetric-power series"""
    parameters = {"m": m, "n": n, "maxDegree": cap}
    report = VerificationReport(parameters=parameters)
    watch = Stopwatch()
    characters = []
    symmetric = []
    for r in range(cap + 1):
        characters.append(sum(sum(hook_schur_ssyt(shape, m, n).graded())
                              for shape in hook_partitions(r, m, n)))
        symmetric.append(sum(hook_schur_ssyt(Partition((r,) if r else ()), m, n).graded()))
    hilbert = list(hilbert_series(m, n, cap))
    powers = list(symmetric_power_series(m, n, cap))
    report.add(make_check("character-dimensions", parameters, characters == hilbert,
                          {"characters": characters, "hilbert": hilbert}))
    report.add(make_check("symmetric-power", parameters, symmetric == powers,
                          {"characters": symmetric, "series": powers}, watch.elapsed_ms))
    return report
