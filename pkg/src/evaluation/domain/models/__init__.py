from .cv_report import CvReport, cv_report_filename

__all__ = ['CvReport', 'cv_report_filename']
