from .render_report_use_case import RenderReportRequest, RenderReportUseCase, write_report_files
from .cross_validate_use_case import CrossValidateRequest, CrossValidateResponse, CrossValidateUseCase

__all__ = [
    'CrossValidateRequest',
    'CrossValidateResponse',
    'CrossValidateUseCase',
    'RenderReportRequest',
    'RenderReportUseCase',
    'write_report_files',
]
