# core/base.py

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


ARTIFACT_NAME = "superplactic-kit"


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"
    XLSX = "xlsx"


class RelationSet(Enum):
    """Which super-Knuth relation families the rewriting uses"""
    FULL = "full"
    FIRST_ONLY = "first-only"


class BracketConvention(Enum):
    """Where the parameter c of a deformed bracket sits"""
    SECOND_TERM = "second-term"
    FIRST_TERM = "first-term"


@dataclass
class CheckResult:
    """Outcome of a single verification check"""
    name: str
    parameters: Dict[str, Any]
    status: CheckStatus
    details: Dict[str, Any] = None
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.details is None:
            self.details = {}

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    def to_dict(self, include_elapsed: bool = True) -> Dict[str, Any]:
        data = {
            "name": self.name,
            "parameters": self.parameters,
            "status": self.status.value,
            "details": self.details,
        }
        if include_elapsed:
            data["elapsedMs"] = round(self.elapsed_ms, 3)
        return data


@dataclass
class VerificationReport:
    """A list of checks; overall status is pass iff every check passes"""
    checks: List[CheckResult] = field(default_factory=list)
    parameters: Dict[str, Any] = field(default_factory=dict)
    artifact: str = ARTIFACT_NAME

    @property
    def overall(self) -> CheckStatus:
        if all(check.passed for check in self.checks):
            return CheckStatus.PASS
        return CheckStatus.FAIL

    @property
    def passed(self) -> bool:
        return self.overall == CheckStatus.PASS

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def failed_checks(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def find(self, name: str) -> Optional[CheckResult]:
        for check in self.checks:
            if check.name == name:
                return check
        return None

    def to_dict(self, include_elapsed: bool = True) -> Dict[str, Any]:
        return {
            "artifact": self.artifact,
            "parameters": self.parameters,
            "checks": [check.to_dict(include_elapsed) for check in self.checks],
            "overall": self.overall.value,
        }


def make_check(name: str, parameters: Dict[str, Any], ok: bool,
               details: Optional[Dict[str, Any]] = None, elapsed_ms: float = 0.0) -> CheckResult:
    status = CheckStatus.PASS if ok else CheckStatus.FAIL
    return CheckResult(name, parameters, status, details or {}, elapsed_ms)


class Stopwatch:
    """Wall-clock timer for check elapsed fields"""

    def __init__(self):
        self._start = time.perf_counter()

    @property
    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self._start) * 1000.0


# Exceptions
class SuperplacticError(Exception):
    """Base exception for the kit"""

    def __init__(self, message: str, details=None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class PoleError(SuperplacticError):
    """Denominator vanishes at the requested specialization point"""
    pass


class VariableMismatch(SuperplacticError):
    pass


class ShapeError(SuperplacticError):
    """Rows do not form a partition profile, or a filling is invalid"""
    pass


class ContainmentError(SuperplacticError):
    pass


class InconsistentSign(SuperplacticError):
    """Two rewriting paths inside one Knuth class carry different signs"""
    pass


class AlphabetMismatch(SuperplacticError):
    pass


class SizeGuardExceeded(SuperplacticError):
    """An exhaustive computation would exceed its desk-scale bound"""

    def __init__(self, message: str, size: int = 0, bound: int = 0):
        super().__init__(message, {"size": size, "bound": bound})
        self.size = size
        self.bound = bound


class InhomogeneousError(SuperplacticError):
    pass


class RankMismatch(SuperplacticError):
    pass


class ParseError(SuperplacticError):
    """Input text does not follow the letter, word, shape or rational grammar"""
    pass


def check_size(what: str, size: int, bound: int) -> None:
    if size > bound:
        raise SizeGuardExceeded(f"{what}: size {size} exceeds bound {bound}", size, bound)
