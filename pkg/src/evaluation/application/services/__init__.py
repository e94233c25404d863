from .error_metrics import relative_error, mean_abs_error
from .cross_validation_service import assign_folds, cross_validate, predict_row
from .frame_level_service import difference_frames, frame_level_energies
from .report_renderer import ReportDocument, format_percent, render_report

__all__ = [
    'relative_error',
    'mean_abs_error',
    'assign_folds',
    'cross_validate',
    'predict_row',
    'difference_frames',
    'frame_level_energies',
    'ReportDocument',
    'format_percent',
    'render_report',
]
