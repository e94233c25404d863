"""
Dependencies - Ensamblado de repositorios, casos de uso y controladores (Evaluation).
"""

from src.evaluation.application.use_cases.cross_validate_use_case import CrossValidateUseCase
from src.evaluation.application.use_cases.render_report_use_case import RenderReportUseCase
from src.evaluation.infrastructure.data.json_cv_report_repository import JsonCvReportRepository
from src.fitting.infrastructure.data.csv_dataset_repository import CsvDatasetRepository


def get_cv_report_repository() -> JsonCvReportRepository:
    return JsonCvReportRepository()


def get_cross_validate_use_case() -> CrossValidateUseCase:
    return CrossValidateUseCase(
        dataset_repository=CsvDatasetRepository(),
        report_repository=get_cv_report_repository(),
    )


def get_render_report_use_case() -> RenderReportUseCase:
    return RenderReportUseCase(report_repository=get_cv_report_repository())


def get_evaluation_controller():
    # Lazy import para evitar imports circulares
    from src.evaluation.infrastructure.controllers.evaluation_controller import EvaluationController
    return EvaluationController(
        cv_use_case=get_cross_validate_use_case(),
        report_use_case=get_render_report_use_case(),
    )
