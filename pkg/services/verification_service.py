"""Verification service: runs named check suites and assembles reports."""

import logging
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from core.algebra import freealg, heckerep, plactic, shapes, symfunc
from core.base import ParseError, VerificationReport
from core.formats.text_format import hecke_to_json, tableau_to_json, tensor_to_json
from core.settings import DEFAULT_SETTINGS, KitSettings

logger = logging.getLogger(__name__)


class VerificationService:
    """Separate check orchestration from the command-line layer."""

    def __init__(self, settings: Optional[KitSettings] = None):
        self.settings = settings or DEFAULT_SETTINGS
        ok, message = self.settings.validate()
        if not ok:
            raise ValueError(f"invalid settings: {message}")
        self._suites: Dict[str, Callable[..., VerificationReport]] = {
            "schur-identity": lambda m, max_degree, **_: symfunc.schur_identity_check(m, max_degree),
            "hook-identity": lambda m, n, max_degree, **_: symfunc.hook_identity_check(m, n, max_degree),
            "characters": lambda m, n, max_size, **_: symfunc.verify_character_routes(m, n, max_size),
            "hook-theorem": lambda m, n, rmax, **_: shapes.verify_hook_theorem(m, n, rmax),
            "plactic": lambda m, n, length, **_: plactic.verify_class_bijection(
                m, n, length, self.settings.relation_set),
            "dimensions": lambda m, n, max_degree, q0=None, **_: freealg.verify_decomposition(
                m, n, max_degree, self._q(q0)),
            "character-dimensions": lambda m, n, max_degree, **_: freealg.verify_character_dimensions(
                m, n, max_degree),
            "jacobi": lambda m, n, **_: freealg.verify_super_jacobi(m, n),
            "gamma": lambda m, n, q0=None, **_: self._gamma(m, n, self._q(q0)),
            "multilinear": lambda max_r, **_: freealg.verify_multilinear(max_r),
            "ybe": lambda m, n, **_: self._ybe(m, n),
            "idempotent": lambda **_: self._idempotent(),
            "gl": lambda m, n, r=1, **_: heckerep.verify_gl_relations(m, n, r),
            "schur-weyl": lambda m, n, r, **_: heckerep.verify_commutant(m, n, r),
        }

    @property
    def suite_names(self) -> List[str]:
        return list(self._suites)

    def _q(self, q0: Optional[Fraction]) -> Fraction:
        if q0 is None:
            return self.settings.q0
        if q0 == 0:
            raise ParseError("q must be nonzero", {"q": str(q0)})
        return q0

    def run(self, name: str, **params) -> VerificationReport:
        """Run one named suite; size guards propagate as SizeGuardExceeded"""
        if name not in self._suites:
            raise KeyError(f"unknown check suite {name!r}")
        logger.info(f"Running suite {name} with {params}")
        report = self._suites[name](**params)
        report.parameters = {"suite": name, **report.parameters}
        logger.info(f"Suite {name}: {report.overall.value} ({len(report.checks)} checks)")
        return report

    def _gamma(self, m: int, n: int, q0: Fraction) -> VerificationReport:
        report = freealg.verify_gamma_span(m, n, q0)
        report.find("gamma-count").details["generators"] = [
            {"family": g.family, "tableau": tableau_to_json(g.tableau), "terms": tensor_to_json(g.element)}
            for g in freealg.gamma_elements(m, n)
        ]
        report.extend(heckerep.idempotent_image(m, n, q0))
        return report

    def _ybe(self, m: int, n: int) -> VerificationReport:
        report = heckerep.verify_ybe_hecke(m, n)
        report.extend(heckerep.verify_sigma_representation(m, n, 3))
        return report

    def _idempotent(self) -> VerificationReport:
        report = self._idempotent_checks()
        report.extend(heckerep.verify_hecke_relations(3))
        return report

    def _idempotent_checks(self) -> VerificationReport:
        report = heckerep.verify_idempotents()
        report.find("idempotent-classical").details["element"] = hecke_to_json(heckerep.eulerian_idempotent())
        report.find("idempotent-deformed").details["element"] = hecke_to_json(heckerep.eulerian_idempotent_q())
        return report

    def report_all(self, m: int, n: int, max_degree: int, rmax: int = 4, r: int = 3,
                   q0: Optional[Fraction] = None) -> VerificationReport:
        """Every suite at fixed parameters, in a fixed order"""
        q0 = self._q(q0)
        report = VerificationReport(parameters={
            "m": m, "n": n, "maxDegree": max_degree, "rmax": rmax, "r": r, "q": str(q0),
        })
        parts = [
            symfunc.hook_identity_check(m, n, max_degree),
            symfunc.schur_identity_check(m, max_degree),
            symfunc.verify_character_routes(m, n, rmax),
            shapes.verify_hook_theorem(m, n, rmax),
            plactic.verify_class_bijection(m, n, rmax, self.settings.relation_set),
            freealg.verify_decomposition(m, n, rmax, q0),
            freealg.verify_character_dimensions(m, n, max_degree),
            freealg.verify_super_jacobi(m, n),
            freealg.verify_multilinear(min(rmax + 1, 5)),
            self._gamma(m, n, q0),
            self._idempotent_checks(),
            heckerep.verify_hecke_relations(r),
            heckerep.verify_ybe_hecke(m, n),
            heckerep.verify_sigma_representation(m, n, r),
            heckerep.verify_commutant(m, n, r),
        ]
        if m + n <= self.settings.max_gl_letters:
            parts.append(heckerep.verify_gl_relations(m, n))
        for part in parts:
            report.extend(part)
        logger.info(f"report all {m}|{n}: {report.overall.value}, "
                    f"{len(report.failed_checks())} of {len(report.checks)} checks failed")
        return report
