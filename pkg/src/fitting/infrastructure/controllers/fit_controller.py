"""
FitController - Adaptador entre el subcomando `fit` y su caso de uso.
"""

import logging
from pathlib import Path

from src.energy_models.domain.models.trained_model import ModelId
from src.fitting.application.services.fitting_service import FitOptions
from src.fitting.application.use_cases.fit_model_use_case import FitModelRequest
from src.shared.exceptions import EXIT_OK, DataException, NoConvergence, UsageException
from src.shared.run_config import RunConfig

logger = logging.getLogger(__name__)


class FitController:

    def __init__(self, fit_use_case):
        self.fit_use_case = fit_use_case

    def fit(self, config: RunConfig) -> int:
        """
        Entrena el modelo indicado con --model y escribe su documento JSON.

        Raises:
            NoConvergence: Tras guardar el modelo, si el ajuste no convergió
        """
        if len(config.inputs) != 1:
            raise UsageException("fit necesita exactamente un dataset")
        if len(config.model_ids) != 1:
            raise UsageException("fit necesita exactamente un --model")
        try:
            model_id = ModelId(config.model_ids[0].upper())
        except ValueError as e:
            raise UsageException(f"Modelo desconocido: {config.model_ids[0]}") from e

        options = FitOptions(
            absolute_residuals=config.absolute_residuals,
            solver=config.solver,
        )
        request = FitModelRequest(
            dataset_path=Path(config.inputs[0]),
            model_id=model_id,
            out_path=Path(config.out) if config.out else None,
            seed=config.seed,
            options=options,
        )
        try:
            response = self.fit_use_case.execute(request)
        except OSError as e:
            raise DataException(f"Error de E/S: {e}") from e

        print(response.model_path)
        result = response.result
        if not result.converged:
            raise NoConvergence(model_id.value, result.iterations)
        return EXIT_OK
