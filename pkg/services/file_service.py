# services/file_service.py

from pathlib import Path
from typing import Dict
import logging

from core.base import OutputFormat, ParseError, VerificationReport

logger = logging.getLogger(__name__)


class FileService:
    """Сервис для работы с файлами отчетов. Формат определяется по расширению."""

    def __init__(self):
        self.supported_formats: Dict[str, OutputFormat] = {
            '.json': OutputFormat.JSON,
            '.csv': OutputFormat.CSV,
            '.xlsx': OutputFormat.XLSX,
            '.txt': OutputFormat.TEXT,
        }

    def is_supported(self, filepath: Path) -> bool:
        """Проверяет, поддерживается ли формат"""
        return filepath.suffix.lower() in self.supported_formats

    def get_format(self, filepath: Path) -> OutputFormat:
        """Возвращает формат отчета по расширению файла"""
        suffix = filepath.suffix.lower()
        if suffix not in self.supported_formats:
            supported = ", ".join(sorted(self.supported_formats))
            raise ParseError(f"unsupported report suffix {suffix or '(none)'!r}; use one of {supported}")
        return self.supported_formats[suffix]

    def write_report(self, filepath: Path, report: VerificationReport, include_elapsed: bool = True) -> OutputFormat:
        """Записывает отчет в формате, выбранном по расширению"""
        from core.formats.xlsx_format import ReportXlsxWriter
        from services.report_generator import ReportGenerator

        fmt = self.get_format(filepath)
        filepath.parent.mkdir(parents=True, exist_ok=True)
        if fmt == OutputFormat.XLSX:
            ReportXlsxWriter.write(filepath, report, include_elapsed)
        else:
            text = ReportGenerator.render(report, fmt, include_elapsed)
            filepath.write_text(text, encoding='utf-8')
        logger.info(f"Report written: {filepath} ({fmt.value}, {len(report.checks)} checks)")
        return fmt
