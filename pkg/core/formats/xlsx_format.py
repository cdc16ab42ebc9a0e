# core/formats/xlsx_format.py

import json
import logging
from pathlib import Path
from typing import Any, List

from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.worksheet.worksheet import Worksheet

from ..base import CheckResult, VerificationReport

logger = logging.getLogger(__name__)

_THIN = Side(style="thin")


class ReportXlsxWriter:
    """XLSX выгрузка отчета проверок: лист Checks с форматированием и лист Summary"""

    HEADERS = ["Check", "Status", "Parameters", "Details", "Elapsed (ms)"]
    JSON_COLUMNS = (3, 4)
    MAX_WIDTH = 60

    HEADER_FONT = Font(bold=True, color="FFFFFF")
    HEADER_FILL = PatternFill(start_color="366092", end_color="366092", fill_type="solid")
    FAIL_FONT = Font(bold=True, color="C00000")
    BORDER = Border(left=_THIN, right=_THIN, top=_THIN, bottom=_THIN)
    CENTER = Alignment(horizontal="center", vertical="center")
    WRAP = Alignment(horizontal="left", vertical="top", wrap_text=True)

    @classmethod
    def write(cls, filepath: Path, report: VerificationReport, include_elapsed: bool = True) -> int:
        """
        Записывает отчет в XLSX

        Args:
            filepath: Путь к файлу
            report: Отчет проверок
            include_elapsed: Писать ли время выполнения (без него файл воспроизводим)

        Returns:
            Количество записанных проверок
        """
        wb = Workbook()
        checks = wb.active
        checks.title = "Checks"
        cls._write_header(checks)
        for row, check in enumerate(report.checks, 2):
            cls._write_check(checks, row, check, include_elapsed)
        checks.freeze_panes = "A2"
        cls._fit_columns(checks)

        cls._write_summary(wb.create_sheet("Summary"), report)

        wb.save(str(filepath))
        logger.info(f"XLSX report written: {filepath} ({len(report.checks)} checks)")
        return len(report.checks)

    @classmethod
    def _write_header(cls, ws: Worksheet):
        for col, header in enumerate(cls.HEADERS, 1):
            cell = ws.cell(row=1, column=col, value=header)
            cell.font = cls.HEADER_FONT
            cell.fill = cls.HEADER_FILL
            cell.alignment = cls.CENTER
            cell.border = cls.BORDER

    @classmethod
    def _write_check(cls, ws: Worksheet, row: int, check: CheckResult, include_elapsed: bool):
        values: List[Any] = [
            check.name,
            check.status.value,
            json.dumps(check.parameters, ensure_ascii=False),
            json.dumps(check.details, ensure_ascii=False),
            round(check.elapsed_ms, 3) if include_elapsed else None,
        ]
        for col, value in enumerate(values, 1):
            cell = ws.cell(row=row, column=col, value=value)
            cell.border = cls.BORDER
            cell.alignment = cls.WRAP if col in cls.JSON_COLUMNS else cls.CENTER
        if not check.passed:
            ws.cell(row=row, column=2).font = cls.FAIL_FONT

    @classmethod
    def _write_summary(cls, ws: Worksheet, report: VerificationReport):
        rows = [
            ("Artifact", report.artifact),
            ("Parameters", json.dumps(report.parameters, ensure_ascii=False)),
            ("Checks", len(report.checks)),
            ("Failed", len(report.failed_checks())),
            ("Overall", report.overall.value),
        ]
        for label, value in rows:
            ws.append([label, value])
            ws.cell(row=ws.max_row, column=1).font = Font(bold=True)
        cls._fit_columns(ws)

    @classmethod
    def _fit_columns(cls, ws: Worksheet):
        # Длинные JSON ячейки переносятся, ширина ограничена
        for column in ws.columns:
            widest = max((len(str(cell.value)) for cell in column if cell.value is not None), default=0)
            ws.column_dimensions[column[0].column_letter].width = min(widest + 2, cls.MAX_WIDTH)
