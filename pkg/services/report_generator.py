# services/report_generator.py

import csv
import io
import json
from typing import Any, Dict, List, Sequence
import logging

from core.base import OutputFormat, VerificationReport

logger = logging.getLogger(__name__)


class ReportGenerator:
    """Генератор текстовых, JSON и CSV представлений отчета проверок"""

    CSV_HEADERS = ["name", "status", "parameters", "details", "elapsedMs"]

    @staticmethod
    def render(report: VerificationReport, fmt: OutputFormat, include_elapsed: bool = True) -> str:
        if fmt == OutputFormat.JSON:
            return ReportGenerator.render_json(report, include_elapsed)
        if fmt == OutputFormat.CSV:
            return ReportGenerator.render_csv(report, include_elapsed)
        if fmt == OutputFormat.TEXT:
            return ReportGenerator.render_text(report, include_elapsed)
        raise ValueError(f"{fmt.value} reports are written by a dedicated writer")

    @staticmethod
    def render_json(report: VerificationReport, include_elapsed: bool = True) -> str:
        return json.dumps(report.to_dict(include_elapsed), ensure_ascii=False, indent=2) + "\n"

    @staticmethod
    def render_csv(report: VerificationReport, include_elapsed: bool = True) -> str:
        rows = []
        for check in report.checks:
            rows.append([
                check.name,
                check.status.value,
                json.dumps(check.parameters, ensure_ascii=False),
                json.dumps(check.details, ensure_ascii=False),
                f"{check.elapsed_ms:.3f}" if include_elapsed else "",
            ])
        return ReportGenerator.render_table(ReportGenerator.CSV_HEADERS, rows)

    @staticmethod
    def render_table(headers: Sequence[str], rows: List[Sequence[Any]]) -> str:
        """CSV с заголовком для табличных выводов команд"""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buffer.getvalue()

    @staticmethod
    def render_text(report: VerificationReport, include_elapsed: bool = True) -> str:
        """Создает текстовый отчет в виде разделов"""
        lines: List[str] = []
        ReportGenerator._write_header(lines, report)
        ReportGenerator._write_checks(lines, report, include_elapsed)
        ReportGenerator._write_failures(lines, report)
        ReportGenerator._write_footer(lines, report)
        return "\n".join(lines) + "\n"

    @staticmethod
    def _write_header(lines: List[str], report: VerificationReport):
        """Записывает заголовок отчета"""
        lines.append("=" * 80)
        lines.append(f"VERIFICATION REPORT - {report.artifact.upper()}")
        lines.append("=" * 80)
        for key, value in report.parameters.items():
            lines.append(f"{key}: {value}")
        lines.append("")

    @staticmethod
    def _write_checks(lines: List[str], report: VerificationReport, include_elapsed: bool):
        """Записывает список проверок со статусами"""
        lines.append("CHECKS")
        lines.append("-" * 40)
        for check in report.checks:
            mark = "PASS" if check.passed else "FAIL"
            timing = f" ({check.elapsed_ms:.1f} ms)" if include_elapsed else ""
            lines.append(f"[{mark}] {check.name} {ReportGenerator._format_mapping(check.parameters)}{timing}")
        lines.append("")

    @staticmethod
    def _write_failures(lines: List[str], report: VerificationReport):
        """Записывает детали ВСЕХ непройденных проверок"""
        failed = report.failed_checks()
        if not failed:
            return
        lines.append(f"FAILED CHECKS ({len(failed)})")
        lines.append("-" * 80)
        for i, check in enumerate(failed, 1):
            lines.append(f"  {i:4d}. {check.name} {ReportGenerator._format_mapping(check.parameters)}")
            for key, value in check.details.items():
                lines.append(f"        {key}: {json.dumps(value, ensure_ascii=False)}")
            lines.append("")

    @staticmethod
    def _write_footer(lines: List[str], report: VerificationReport):
        """Записывает подвал отчета"""
        passed = len(report.checks) - len(report.failed_checks())
        lines.append("=" * 80)
        lines.append(f"OVERALL: {report.overall.value.upper()} ({passed}/{len(report.checks)} checks passed)")
        lines.append("=" * 80)

    @staticmethod
    def _format_mapping(data: Dict[str, Any]) -> str:
        return "(" + ", ".join(f"{k}={v}" for k, v in data.items()) + ")"
