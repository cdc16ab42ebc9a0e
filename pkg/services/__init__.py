from .file_service import FileService
from .report_generator import ReportGenerator
from .verification_service import VerificationService

__all__ = [
    'FileService',
    'ReportGenerator',
    'VerificationService',
]
