# core/algebra/shapes.py
"""
Partitions, the (m, n)-hook and super semistandard Young tableaux over the
signed alphabet 1 < ... < m < 1' < ... < n'.
"""

import logging
from dataclasses import dataclass
from math import factorial
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from ..base import ShapeError, Stopwatch, VerificationReport, make_check

logger = logging.getLogger(__name__)

EVEN = 0
ODD = 1

# above this size count_standard switches to the hook-length formula
STANDARD_ENUMERATION_LIMIT = 8


@dataclass(frozen=True)
class SignedLetter:
    """Basis letter of V = V0 + V1; evens precede odds, then by index"""
    index: int
    parity: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"letter index must be positive, got {self.index}")
        if self.parity not in (EVEN, ODD):
            raise ValueError(f"letter parity must be 0 or 1, got {self.parity}")

    @classmethod
    def even(cls, index: int) -> "SignedLetter":
        return cls(index, EVEN)

    @classmethod
    def odd(cls, index: int) -> "SignedLetter":
        return cls(index, ODD)

    @property
    def key(self) -> Tuple[int, int]:
        return self.parity, self.index

    @property
    def is_odd(self) -> bool:
        return self.parity == ODD

    def rank(self, m: int) -> int:
        """Position in the ordered m|n alphabet, starting at 1"""
        return self.index if self.parity == EVEN else m + self.index

    def fits(self, m: int, n: int) -> bool:
        return self.index <= (n if self.is_odd else m)

    def __lt__(self, other: "SignedLetter") -> bool:
        return self.key < other.key

    def __le__(self, other: "SignedLetter") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "SignedLetter") -> bool:
        return self.key > other.key

    def __ge__(self, other: "SignedLetter") -> bool:
        return self.key >= other.key

    def __str__(self):
        return f"{self.index}'" if self.is_odd else str(self.index)


SignedWord = Tuple[SignedLetter, ...]


def alphabet(m: int, n: int) -> List[SignedLetter]:
    """The m|n alphabet in its total order"""
    return [SignedLetter.even(i) for i in range(1, m + 1)] + [SignedLetter.odd(i) for i in range(1, n + 1)]


def word_key(word: Sequence[SignedLetter]) -> Tuple[Tuple[int, int], ...]:
    return tuple(letter.key for letter in word)


def word_parity(word: Sequence[SignedLetter]) -> int:
    return sum(letter.parity for letter in word) % 2


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive parts"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ShapeError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ShapeError(f"partition parts must be weakly decreasing: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def part(self, j: int) -> int:
        """j-th part counted from 0, zero beyond the last row"""
        return self.parts[j] if j < len(self.parts) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(self.part(j) >= other.part(j) for j in range(len(other)))

    def cells(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, length in enumerate(self.parts) for j in range(length)]

    def corners(self) -> List[int]:
        """Rows whose last cell can be removed"""
        return [i for i in range(len(self.parts)) if self.part(i) > self.part(i + 1)]

    def __str__(self):
        return ",".join(str(p) for p in self.parts) if self.parts else "∅"


EMPTY_PARTITION = Partition(())


def _partitions(r: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    if r == 0:
        yield ()
        return
    for first in range(min(r, max_part), 0, -1):
        for rest in _partitions(r - first, first):
            yield (first,) + rest


def partitions_of(r: int) -> List[Partition]:
    """All partitions of r in lexicographically decreasing order"""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return [Partition(parts) for parts in _partitions(r, r)]


def partitions_up_to(size: int) -> List[Partition]:
    result = []
    for r in range(size + 1):
        result.extend(partitions_of(r))
    return result


def conjugate(shape: Partition) -> Partition:
    if not shape.parts:
        return EMPTY_PARTITION
    return Partition(tuple(sum(1 for p in shape.parts if p > j) for j in range(shape.parts[0])))


def in_hook(shape: Partition, m: int, n: int) -> bool:
    """lambda_j <= n for every row j > m"""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    return all(p <= n for p in shape.parts[m:])


def hook_partitions(r: int, m: int, n: int) -> List[Partition]:
    return [shape for shape in partitions_of(r) if in_hook(shape, m, n)]


def _row_ok(left: SignedLetter, right: SignedLetter) -> bool:
    return left < right or (left == right and not right.is_odd)


def _column_ok(above: SignedLetter, below: SignedLetter) -> bool:
    return above < below or (above == below and below.is_odd)


@dataclass(frozen=True)
class SSYT:
    """A filling of a shape by signed letters"""
    shape: Partition
    rows: Tuple[Tuple[SignedLetter, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(row) for row in rows) != self.shape.parts:
            raise ShapeError(f"row lengths {[len(r) for r in rows]} do not match shape {self.shape}")

    @classmethod
    def empty(cls) -> "SSYT":
        return cls(EMPTY_PARTITION, ())

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[SignedLetter]], validate: bool = True) -> "SSYT":
        shape = row_profile(rows)
        tableau = cls(shape, tuple(tuple(row) for row in rows))
        if validate and not is_valid_ssyt(tableau):
            raise ShapeError("filling violates the row/column conditions",
                             {"rows": [[str(x) for x in row] for row in rows]})
        return tableau

    @property
    def size(self) -> int:
        return self.shape.size

    def letters(self) -> List[SignedLetter]:
        return [letter for row in self.rows for letter in row]

    def entry(self, i: int, j: int) -> SignedLetter:
        return self.rows[i][j]

    def fits(self, m: int, n: int) -> bool:
        return all(letter.fits(m, n) for letter in self.letters())

    def __str__(self):
        if not self.rows:
            return "∅"
        return "/".join("[" + ",".join(str(x) for x in row) + "]" for row in self.rows)


def row_profile(rows: Sequence[Sequence[SignedLetter]]) -> Partition:
    lengths = tuple(len(row) for row in rows)
    if any(length == 0 for length in lengths):
        raise ShapeError("empty row inside a tableau")
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        raise ShapeError(f"row lengths {lengths} are not weakly decreasing")
    return Partition(lengths)


def is_valid_ssyt(candidate: Union[SSYT, Sequence[Sequence[SignedLetter]]]) -> bool:
    """Rows weakly increase with strict odd letters, columns weakly increase with strict even letters"""
    rows = candidate.rows if isinstance(candidate, SSYT) else candidate
    row_profile(rows)
    for row in rows:
        for left, right in zip(row, row[1:]):
            if not _row_ok(left, right):
                return False
    for above_row, below_row in zip(rows, rows[1:]):
        for above, below in zip(above_row, below_row):
            if not _column_ok(above, below):
                return False
    return True


def _fillings(shape: Partition, letters: Sequence[SignedLetter]) -> Iterator[List[List[SignedLetter]]]:
    cells = shape.cells()
    grid: List[List[Optional[SignedLetter]]] = [[None] * length for length in shape.parts]

    def place(k: int):
        if k == len(cells):
            yield [list(row) for row in grid]
            return
        i, j = cells[k]
        left = grid[i][j - 1] if j > 0 else None
        above = grid[i - 1][j] if i > 0 else None
        for letter in letters:
            if left is not None and not _row_ok(left, letter):
                continue
            if above is not None and not _column_ok(above, letter):
                continue
            grid[i][j] = letter
            yield from place(k + 1)
        grid[i][j] = None

    yield from place(0)


def reading_word(tableau: SSYT) -> SignedWord:
    """Rows from bottom to top, each left to right"""
    return tuple(letter for row in reversed(tableau.rows) for letter in row)


def enumerate_ssyt(shape: Partition, m: int, n: int) -> List[SSYT]:
    """All SSYT of the shape over the m|n alphabet, ordered by reading word"""
    tableaux = [SSYT(shape, tuple(tuple(row) for row in rows)) for rows in _fillings(shape, alphabet(m, n))]
    tableaux.sort(key=lambda t: word_key(reading_word(t)))
    logger.debug("shape %s over %d|%d: %d tableaux", shape, m, n, len(tableaux))
    return tableaux


def ssyt_count(shape: Partition, m: int, n: int) -> int:
    return sum(1 for _ in _fillings(shape, alphabet(m, n)))


def weight(tableau: SSYT, m: int, n: int) -> Tuple[int, ...]:
    """Letter multiplicities, evens first then odds"""
    exps = [0] * (m + n)
    for letter in tableau.letters():
        exps[letter.rank(m) - 1] += 1
    return tuple(exps)


def _count_standard_by_enumeration(shape: Partition) -> int:
    # every standard tableau is a unique sequence of corner removals
    if shape.size == 0:
        return 1
    total = 0
    for i in shape.corners():
        parts = list(shape.parts)
        parts[i] -= 1
        total += _count_standard_by_enumeration(Partition(tuple(p for p in parts if p > 0)))
    return total


def hook_length_count(shape: Partition) -> int:
    dual = conjugate(shape)
    product = 1
    for i, j in shape.cells():
        product *= (shape.part(i) - j - 1) + (dual.part(j) - i - 1) + 1
    return factorial(shape.size) // product


def count_standard(shape: Partition) -> int:
    """Number of standard Young tableaux f^lambda"""
    if shape.size <= STANDARD_ENUMERATION_LIMIT:
        return _count_standard_by_enumeration(shape)
    return hook_length_count(shape)


def verify_hook_theorem(m: int, n: int, rmax: int) -> VerificationReport:
    """A shape carries tableaux over m|n exactly when it lies in the hook"""
    report = VerificationReport(parameters={"m": m, "n": n, "rmax": rmax})
    watch = Stopwatch()
    mismatches = []
    counted = 0
    for shape in partitions_up_to(rmax):
        counted += 1
        nonempty = ssyt_count(shape, m, n) > 0
        if shape.size > 0 and nonempty != in_hook(shape, m, n):
            mismatches.append(str(shape))
    report.add(make_check("hook-theorem", {"m": m, "n": n, "rmax": rmax}, not mismatches,
                          {"shapes": counted, "mismatches": mismatches}, watch.elapsed_ms))
    return report
