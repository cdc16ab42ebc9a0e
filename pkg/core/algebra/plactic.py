# core/algebra/plactic.py
"""
Super-plactic monoid: signed Knuth rewriting, row insertion to SSYT normal
form, tableau products and brute-force class oracles.
"""

import logging
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from ..base import (
    AlphabetMismatch, InconsistentSign, RelationSet, Stopwatch, VerificationReport, check_size, make_check,
)
from ..settings import DEFAULT_SETTINGS
from .shapes import (
    SSYT, SignedLetter, SignedWord, alphabet, enumerate_ssyt, partitions_of,
    reading_word, row_profile, ssyt_count,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignedNormalForm:
    sign: int
    tableau: SSYT

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")


def _first_relation(x: SignedLetter, y: SignedLetter, z: SignedLetter) -> bool:
    """xzy ~ zxy"""
    if y.is_odd:
        return x < y <= z
    return x <= y < z


def _second_relation(x: SignedLetter, y: SignedLetter, z: SignedLetter) -> bool:
    """yxz ~ yzx"""
    if y.is_odd:
        return x <= y < z
    return x < y <= z


def _swap_sign(a: SignedLetter, b: SignedLetter) -> int:
    return -1 if a.is_odd and b.is_odd else 1


def knuth_neighbors(word: Sequence[SignedLetter],
                    relations: RelationSet = RelationSet.FULL) -> List[Tuple[SignedWord, int]]:
    """Words one super-Knuth move away, each with the factor (-1)^(x^ z^) of the swapped pair"""
    word = tuple(word)
    found: List[Tuple[SignedWord, int]] = []
    for p in range(len(word) - 2):
        a, b, c = word[p:p + 3]
        prefix, suffix = word[:p], word[p + 3:]
        # window x z y -> z x y, and back
        if _first_relation(a, c, b):
            found.append((prefix + (b, a, c) + suffix, _swap_sign(a, b)))
        if _first_relation(b, c, a):
            found.append((prefix + (b, a, c) + suffix, _swap_sign(a, b)))
        if relations == RelationSet.FIRST_ONLY:
            continue
        # window y x z -> y z x, and back
        if _second_relation(b, a, c):
            found.append((prefix + (a, c, b) + suffix, _swap_sign(b, c)))
        if _second_relation(c, a, b):
            found.append((prefix + (a, c, b) + suffix, _swap_sign(b, c)))
    return found


def _bumps(resident: SignedLetter, incoming: SignedLetter) -> bool:
    return resident > incoming or (resident == incoming and incoming.is_odd)


def insert(tableau: SSYT, letter: SignedLetter) -> SSYT:
    """Row insertion: bump the leftmost entry y with y > a, or y = a when a is odd"""
    rows = [list(row) for row in tableau.rows]
    carried = letter
    for row in rows:
        position = next((k for k, resident in enumerate(row) if _bumps(resident, carried)), None)
        if position is None:
            row.append(carried)
            carried = None
            break
        row[position], carried = carried, row[position]
    if carried is not None:
        rows.append([carried])
    return SSYT(row_profile(rows), tuple(tuple(row) for row in rows))


def insert_word(word: Sequence[SignedLetter], tableau: Optional[SSYT] = None) -> SSYT:
    result = tableau if tableau is not None else SSYT.empty()
    for letter in word:
        result = insert(result, letter)
    return result


def class_signs(start: SignedWord, relations: RelationSet = RelationSet.FULL,
                limit: Optional[int] = None) -> Tuple[Dict[SignedWord, int], bool]:
    """
    Breadth-first walk of the unsigned Knuth class of start.

    Returns the sign of every class member relative to start and whether
    every move in the class agrees with those signs.
    """
    limit = limit or DEFAULT_SETTINGS.max_class_words
    signs: Dict[SignedWord, int] = {start: 1}
    queue = deque([start])
    consistent = True
    while queue:
        current = queue.popleft()
        for neighbor, factor in knuth_neighbors(current, relations):
            expected = signs[current] * factor
            known = signs.get(neighbor)
            if known is None:
                signs[neighbor] = expected
                check_size("Knuth class exploration", len(signs), limit)
                queue.append(neighbor)
            elif known != expected:
                consistent = False
    return signs, consistent


def normal_form(word: Sequence[SignedLetter], relations: RelationSet = RelationSet.FULL) -> SignedNormalForm:
    """Insertion tableau of the word and the sign of the rewrite from the word to its reading word"""
    word = tuple(word)
    tableau = insert_word(word)
    target = reading_word(tableau)
    signs, consistent = class_signs(word, relations)
    if not consistent:
        raise InconsistentSign("rewriting paths inside the class disagree on the sign",
                               {"word": [str(x) for x in word]})
    if target not in signs:
        raise InconsistentSign("insertion tableau word is not reachable by Knuth moves",
                               {"word": [str(x) for x in word], "tableau": str(tableau)})
    return SignedNormalForm(signs[target], tableau)


def plactic_product(left: SSYT, right: SSYT, m: int, n: int) -> SignedNormalForm:
    for tableau in (left, right):
        if not tableau.fits(m, n):
            raise AlphabetMismatch(f"tableau {tableau} uses letters outside the {m}|{n} alphabet")
    return normal_form(reading_word(left) + reading_word(right))


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, k: int) -> int:
        while self.parent[k] != k:
            self.parent[k] = self.parent[self.parent[k]]
            k = self.parent[k]
        return k

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def enumerate_classes(m: int, n: int, r: int,
                      relations: RelationSet = RelationSet.FULL) -> List[List[SignedWord]]:
    """All length-r words split into unsigned Knuth classes, each class sorted, classes by first word"""
    letters = alphabet(m, n)
    check_size("plactic class enumeration", len(letters) ** r, DEFAULT_SETTINGS.max_class_words)
    words = [tuple(w) for w in product(letters, repeat=r)]
    index = {word: k for k, word in enumerate(words)}
    forest = _UnionFind(len(words))
    for k, word in enumerate(words):
        for neighbor, _ in knuth_neighbors(word, relations):
            forest.union(k, index[neighbor])
    grouped: Dict[int, List[SignedWord]] = {}
    for k, word in enumerate(words):
        grouped.setdefault(forest.find(k), []).append(word)
    classes = sorted(grouped.values(), key=lambda members: members[0])
    logger.info("%d|%d words of length %d: %d classes", m, n, r, len(classes))
    return classes


def _expected_class_count(m: int, n: int, r: int) -> int:
    return sum(ssyt_count(shape, m, n) for shape in partitions_of(r))


def verify_class_bijection(m: int, n: int, r: int,
                           relations: RelationSet = RelationSet.FULL) -> VerificationReport:
    """
    Checks that every class holds exactly one tableau reading word, that
    insertion sends the class to that tableau, that the class count is the
    SSYT count and that signs are path independent.
    """
    parameters = {"m": m, "n": n, "r": r}
    report = VerificationReport(parameters=parameters)
    watch = Stopwatch()
    classes = enumerate_classes(m, n, r, relations)
    tableau_words: Dict[SignedWord, SSYT] = {}
    for shape in partitions_of(r):
        for tableau in enumerate_ssyt(shape, m, n):
            tableau_words[reading_word(tableau)] = tableau

    bad_representatives = []
    bad_insertions = []
    inconsistent = []
    by_shape: Dict[str, int] = {}
    for members in classes:
        representatives = [w for w in members if w in tableau_words]
        label = ",".join(str(x) for x in members[0])
        if len(representatives) != 1:
            bad_representatives.append({"class": label, "tableauWords": len(representatives)})
            continue
        tableau = tableau_words[representatives[0]]
        shape_key = str(tableau.shape)
        by_shape[shape_key] = by_shape.get(shape_key, 0) + 1
        if any(insert_word(w) != tableau for w in members):
            bad_insertions.append(label)
        _, consistent = class_signs(representatives[0], relations)
        if not consistent:
            inconsistent.append(label)

    expected = _expected_class_count(m, n, r)
    report.add(make_check("plactic-representatives", parameters, not bad_representatives,
                          {"classes": len(classes), "failures": bad_representatives[:10]}))
    report.add(make_check("plactic-insertion", parameters, not bad_insertions,
                          {"failures": bad_insertions[:10]}))
    report.add(make_check("plactic-class-count", parameters, len(classes) == expected,
                          {"classes": len(classes), "ssyt": expected,
                           "byShape": dict(sorted(by_shape.items()))}))
    report.add(make_check("plactic-sign-consistency", parameters, not inconsistent,
                          {"signConsistent": not inconsistent, "failures": inconsistent[:10]},
                          watch.elapsed_ms))
    return report


def class_report(m: int, n: int, r: int, relations: RelationSet = RelationSet.FULL) -> Dict[str, object]:
    """{"classes": N, "byShape": {...}, "signConsistent": bool}"""
    classes = enumerate_classes(m, n, r, relations)
    by_shape: Dict[str, int] = {}
    consistent = True
    for members in classes:
        tableau = insert_word(members[0])
        key = str(tableau.shape)
        by_shape[key] = by_shape.get(key, 0) + 1
        _, ok = class_signs(members[0], relations)
        consistent = consistent and ok
    return {"classes": len(classes), "byShape": dict(sorted(by_shape.items())), "signConsistent": consistent}

