"""
EstimateController - Adaptador entre el subcomando `estimate` y su caso de uso.
"""

import logging
from pathlib import Path

from src.energy_models.application.use_cases.estimate_energy_use_case import EstimateEnergyRequest
from src.shared.exceptions import EXIT_OK, DataException, UsageException
from src.shared.run_config import RunConfig

logger = logging.getLogger(__name__)


def format_estimate_line(stream_id: str, model_id: str, energy: float) -> str:
    return f"{stream_id} {model_id} {energy:.6g} J"


class EstimateController:

    def __init__(self, estimate_use_case):
        self.estimate_use_case = estimate_use_case

    def estimate(self, config: RunConfig) -> int:
        """
        Imprime una línea `<stream_id> <model_id> <energía> J` por entrada.

        inputs[0] es el modelo entrenado; el resto son CSV de features o datasets.
        """
        if len(config.inputs) < 2:
            raise UsageException("estimate necesita un modelo y al menos una entrada")

        request = EstimateEnergyRequest(
            model_path=Path(config.inputs[0]),
            input_paths=[Path(p) for p in config.inputs[1:]],
            breakdown=config.breakdown,
        )
        try:
            response = self.estimate_use_case.execute(request)
        except OSError as e:
            raise DataException(f"Error de E/S: {e}") from e

        for estimate in response.estimates:
            print(format_estimate_line(estimate.stream_id, estimate.model_id, estimate.energy))
            for fid, contribution in estimate.breakdown or ():
                print(f"  {fid.label} {contribution:.6g} J")
        return EXIT_OK
