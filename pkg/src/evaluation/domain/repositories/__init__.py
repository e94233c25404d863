from .cv_report_repository import CvReportRepository

__all__ = ['CvReportRepository']
