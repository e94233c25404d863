"""
EvaluationController - Adaptador de los subcomandos `cv` y `report`.
"""

import logging
from pathlib import Path
from typing import List

from src.energy_models.domain.models.trained_model import ModelId
from src.evaluation.application.use_cases.cross_validate_use_case import CrossValidateRequest
from src.evaluation.application.use_cases.render_report_use_case import RenderReportRequest
from src.fitting.application.services.fitting_service import FitOptions
from src.shared.exceptions import EXIT_OK, DataException, UsageException
from src.shared.run_config import RunConfig

logger = logging.getLogger(__name__)


def _parse_models(raw: List[str]) -> List[ModelId]:
    if not raw:
        raise UsageException("Falta --model")
    try:
        return list(dict.fromkeys(ModelId(item.upper()) for item in raw))
    except ValueError as e:
        raise UsageException(f"Modelo desconocido: {e}") from e


class EvaluationController:

    def __init__(self, cv_use_case, report_use_case):
        self.cv_use_case = cv_use_case
        self.report_use_case = report_use_case

    def cross_validate(self, config: RunConfig) -> int:
        """Valida cada modelo de --model y muestra la tabla resultante."""
        if len(config.inputs) != 1:
            raise UsageException("cv necesita exactamente un dataset")
        request = CrossValidateRequest(
            dataset_path=Path(config.inputs[0]),
            model_ids=_parse_models(config.model_ids),
            seed=config.seed,
            folds=config.folds,
            out_dir=Path(config.out or "."),
            system=config.system,
            frame_level=config.frame_level,
            options=FitOptions(absolute_residuals=config.absolute_residuals, solver=config.solver),
        )
        try:
            response = self.cv_use_case.execute(request)
        except OSError as e:
            raise DataException(f"Error de E/S: {e}") from e
        print(response.table_text, end="")
        return EXIT_OK

    def report(self, config: RunConfig) -> int:
        """Une informes JSON de CV en report.csv / report.txt."""
        if not config.inputs:
            raise UsageException("report necesita al menos un informe de CV")
        request = RenderReportRequest(
            report_paths=[Path(p) for p in config.inputs],
            out_dir=Path(config.out or "."),
        )
        try:
            text = self.report_use_case.execute(request)
        except OSError as e:
            raise DataException(f"Error de E/S: {e}") from e
        print(text, end="")
        return EXIT_OK
