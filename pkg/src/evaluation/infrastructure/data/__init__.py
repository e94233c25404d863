from .json_cv_report_repository import (
    JsonCvReportRepository,
    cv_report_filename,
    cv_report_from_document,
    cv_report_to_document,
)

__all__ = [
    'JsonCvReportRepository',
    'cv_report_filename',
    'cv_report_from_document',
    'cv_report_to_document',
]
