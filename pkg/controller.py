# controller.py

from pathlib import Path
from typing import List, Optional, TextIO
import logging
import sys

from core.base import OutputFormat, VerificationReport
from core.settings import KitSettings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class KitController:
    """Обработчики подкоманд: разбор ввода, вызов алгебры, печать результата, код выхода"""

    def __init__(self, settings: Optional[KitSettings] = None, out: Optional[TextIO] = None):
        from services.file_service import FileService
        from services.verification_service import VerificationService

        self.settings = settings or KitSettings()
        self.out = out or sys.stdout
        self.file_service = FileService()
        self.verification = VerificationService(self.settings)

    def _emit(self, text: str):
        self.out.write(text if text.endswith("\n") else text + "\n")

    def _emit_json(self, data):
        from core.formats.text_format import dump_json
        self._emit(dump_json(data))

    def _emit_table(self, headers: List[str], rows: List[List]):
        from services.report_generator import ReportGenerator
        self._emit(ReportGenerator.render_table(headers, rows))

    # Таблицы

    def ssyt(self, action: str, shape_text: str, m: int, n: int, fmt: OutputFormat) -> int:
        from core.algebra.shapes import enumerate_ssyt, reading_word, ssyt_count
        from core.formats.text_format import format_shape, format_tableau, format_word, parse_shape, tableau_to_json

        shape = parse_shape(shape_text)
        if action == "count":
            count = ssyt_count(shape, m, n)
            if fmt == OutputFormat.JSON:
                self._emit_json({"shape": format_shape(shape), "m": m, "n": n, "count": count})
            elif fmt == OutputFormat.CSV:
                self._emit_table(["shape", "m", "n", "count"], [[format_shape(shape), m, n, count]])
            else:
                self._emit(str(count))
            return EXIT_OK

        tableaux = enumerate_ssyt(shape, m, n)
        logger.info(f"Listed {len(tableaux)} tableaux of shape {shape} over {m}|{n}")
        if fmt == OutputFormat.JSON:
            self._emit_json([tableau_to_json(t) for t in tableaux])
        elif fmt == OutputFormat.CSV:
            rows = [[k, format_shape(t.shape), format_tableau(t), format_word(reading_word(t))]
                    for k, t in enumerate(tableaux, 1)]
            self._emit_table(["index", "shape", "rows", "readingWord"], rows)
        else:
            self._emit("\n".join(format_tableau(t) for t in tableaux) if tableaux else "")
        return EXIT_OK

    # Характеры

    def character(self, kind: str, shape_text: str, m: int, n: int, route: str, fmt: OutputFormat) -> int:
        from core.algebra.symfunc import hook_schur_factorized, hook_schur_ssyt, schur
        from core.formats.text_format import character_to_json, format_rational, parse_shape

        shape = parse_shape(shape_text)
        if kind == "schur":
            poly = schur(shape, m)
        elif route == "factorized":
            poly = hook_schur_factorized(shape, m, n)
        else:
            poly = hook_schur_ssyt(shape, m, n)

        if fmt == OutputFormat.JSON:
            self._emit_json(character_to_json(poly))
        elif fmt == OutputFormat.CSV:
            names = poly.variable_names() if len(set(poly.variable_names())) == poly.m + poly.n \
                else [f"e{k}" for k in range(1, poly.m + poly.n + 1)]
            rows = [list(exps) + [format_rational(c)] for exps, c in poly.poly.sorted_terms()]
            self._emit_table(names + ["coefficient"], rows)
        else:
            self._emit(str(poly))
        return EXIT_OK

    # Плактический моноид

    def plactic_normal_form(self, word_text: str, fmt: OutputFormat) -> int:
        from core.algebra.plactic import normal_form
        from core.formats.text_format import format_tableau, format_word, parse_word, tableau_to_json

        word = parse_word(word_text)
        result = normal_form(word, self.settings.relation_set)
        if fmt == OutputFormat.JSON:
            self._emit_json({"word": format_word(word), "sign": result.sign,
                             "tableau": tableau_to_json(result.tableau)})
        else:
            self._emit(f"{result.sign:+d} {format_tableau(result.tableau)}")
        return EXIT_OK

    def plactic_product(self, left_text: str, right_text: str, m: int, n: int, fmt: OutputFormat) -> int:
        from core.algebra.plactic import plactic_product
        from core.formats.text_format import format_tableau, parse_tableau, tableau_to_json

        left, right = parse_tableau(left_text), parse_tableau(right_text)
        # Без --m/--n алфавит берется наименьшим, вмещающим обе таблицы
        letters = list(left.letters()) + list(right.letters())
        if m is None:
            m = max((x.index for x in letters if not x.is_odd), default=0)
        if n is None:
            n = max((x.index for x in letters if x.is_odd), default=0)
        result = plactic_product(left, right, m, n)
        if fmt == OutputFormat.JSON:
            self._emit_json({"sign": result.sign, "tableau": tableau_to_json(result.tableau)})
        else:
            self._emit(f"{result.sign:+d} {format_tableau(result.tableau)}")
        return EXIT_OK

    def plactic_classes(self, m: int, n: int, length: int, fmt: OutputFormat) -> int:
        from core.algebra.plactic import class_report

        summary = class_report(m, n, length, self.settings.relation_set)
        if fmt == OutputFormat.JSON:
            self._emit_json(summary)
        elif fmt == OutputFormat.CSV:
            self._emit_table(["shape", "classes"], [[k, v] for k, v in summary["byShape"].items()])
        else:
            lines = [f"classes: {summary['classes']}", f"signConsistent: {str(summary['signConsistent']).lower()}"]
            lines += [f"  {shape}: {count}" for shape, count in summary["byShape"].items()]
            self._emit("\n".join(lines))
        return EXIT_OK

    # Проверки

    def _emit_report(self, report: VerificationReport, fmt: OutputFormat):
        from services.report_generator import ReportGenerator
        self._emit(ReportGenerator.render(report, fmt if fmt != OutputFormat.XLSX else OutputFormat.TEXT))

    def verify(self, suite: str, fmt: OutputFormat, **params) -> int:
        report = self.verification.run(suite, **params)
        self._emit_report(report, fmt)
        return EXIT_OK if report.passed else EXIT_FAILED

    def report_all(self, out_path: Path, m: int, n: int, max_degree: int, rmax: int, r: int,
                   q0=None, details_log: Optional[str] = None) -> int:
        fmt = self.file_service.get_format(out_path)
        report = self.verification.report_all(m, n, max_degree, rmax, r, q0)
        self.file_service.write_report(out_path, report)
        if details_log:
            self._log_details(report, details_log)
        failed = report.failed_checks()
        self._emit(f"{report.overall.value}: {len(report.checks) - len(failed)}/{len(report.checks)} "
                   f"checks passed, {fmt.value} report written to {out_path}")
        for check in failed:
            self._emit(f"  FAIL {check.name} {check.parameters}")
        return EXIT_OK if report.passed else EXIT_FAILED

    @staticmethod
    def _log_details(report: VerificationReport, logfile: str):
        """Подробный журнал: одна запись на проверку с параметрами и деталями"""
        from utils.logger import get_file_logger

        log = get_file_logger(logfile)
        for check in report.checks:
            log.info(f"{check.status.value.upper()} {check.name} {check.parameters} {check.details}")
        log.info(f"OVERALL {report.overall.value.upper()} {report.parameters}")
