"""
CrossValidateUseCase - Validación cruzada de varios modelos sobre un dataset.

Escribe un informe JSON por modelo y la tabla sistemas × modelos.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from src.energy_models.domain.models.trained_model import ModelId
from src.evaluation.application.services.cross_validation_service import cross_validate
from src.evaluation.application.services.frame_level_service import difference_frames
from src.evaluation.application.use_cases.render_report_use_case import write_report_files
from src.evaluation.domain.models.cv_report import CvReport, cv_report_filename
from src.evaluation.domain.repositories.cv_report_repository import CvReportRepository
from src.fitting.application.services.fitting_service import FitOptions
from src.fitting.domain.repositories.dataset_repository import DatasetRepository

logger = logging.getLogger(__name__)


@dataclass
class CrossValidateRequest:
    """Request para validación cruzada"""
    dataset_path: Path
    model_ids: List[ModelId]
    seed: int
    folds: int
    out_dir: Path
    system: Optional[str] = None
    frame_level: bool = False
    options: Optional[FitOptions] = None


@dataclass
class CrossValidateResponse:
    reports: List[CvReport] = field(default_factory=list)
    report_paths: List[Path] = field(default_factory=list)
    table_text: str = ""


class CrossValidateUseCase:

    def __init__(self, dataset_repository: DatasetRepository, report_repository: CvReportRepository):
        self.dataset_repository = dataset_repository
        self.report_repository = report_repository

    def execute(self, request: CrossValidateRequest) -> CrossValidateResponse:
        dataset = self.dataset_repository.load(request.dataset_path)
        system = request.system or dataset.name
        dropped = 0
        if request.frame_level:
            dataset, dropped = difference_frames(dataset)

        request.out_dir.mkdir(parents=True, exist_ok=True)
        response = CrossValidateResponse()
        for model_id in request.model_ids:
            logger.info(f"🔁 CV {model_id.value} sobre {system} ({len(dataset)} filas, {request.folds} folds)")
            report = cross_validate(
                dataset,
                model_id,
                seed=request.seed,
                folds=request.folds,
                options=request.options,
                system=system,
                frame_level=request.frame_level,
                dropped_rows=dropped,
            )
            path = request.out_dir / cv_report_filename(system, model_id.value)
            response.reports.append(report)
            response.report_paths.append(self.report_repository.save(report, path))

        response.table_text = write_report_files(response.reports, request.out_dir)
        return response
