from .dependencies import (
    get_cv_report_repository,
    get_cross_validate_use_case,
    get_render_report_use_case,
    get_evaluation_controller,
)

__all__ = [
    'get_cv_report_repository',
    'get_cross_validate_use_case',
    'get_render_report_use_case',
    'get_evaluation_controller',
]
