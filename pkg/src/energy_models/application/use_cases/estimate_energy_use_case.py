"""
EstimateEnergyUseCase - Aplica un modelo entrenado a vectores de features o filas de dataset.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from src.bitstream.domain.models.feature_vector import FeatureId
from src.bitstream.domain.repositories.feature_vector_repository import FeatureVectorRepository
from src.energy_models.application.services.prediction_service import energy_breakdown, predict
from src.energy_models.domain.models.model_catalog import FEATURE_MODELS
from src.energy_models.domain.repositories.trained_model_repository import TrainedModelRepository
from src.fitting.domain.repositories.dataset_repository import DatasetRepository

logger = logging.getLogger(__name__)

FEATURE_CSV_HEADER = "feature,depth,count"


@dataclass
class EstimateEnergyRequest:
    """Request para estimar energías"""
    model_path: Path
    input_paths: List[Path]
    breakdown: bool = False


@dataclass
class EnergyEstimate:
    stream_id: str
    model_id: str
    energy: float
    breakdown: Optional[List[Tuple[FeatureId, float]]] = None


@dataclass
class EstimateEnergyResponse:
    estimates: List[EnergyEstimate] = field(default_factory=list)


def _is_feature_csv(path: Path) -> bool:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.readline().strip() == FEATURE_CSV_HEADER


def _stream_id_from_feature_file(path: Path) -> str:
    # <stream_id>.<KIND>.csv tal como lo escribe `extract`
    stem = path.stem
    for suffix in (".FA", ".FS"):
        if stem.endswith(suffix):
            return stem[: -len(suffix)]
    return stem


class EstimateEnergyUseCase:
    """
    Caso de uso: estimar Ê_dec con un modelo ya entrenado.

    Cada archivo de entrada es un CSV de features (`feature,depth,count`) o
    un dataset CSV; en el segundo caso se estima una energía por fila.
    """

    def __init__(
        self,
        model_repository: TrainedModelRepository,
        vector_repository: FeatureVectorRepository,
        dataset_repository: DatasetRepository,
    ):
        self.model_repository = model_repository
        self.vector_repository = vector_repository
        self.dataset_repository = dataset_repository

    def execute(self, request: EstimateEnergyRequest) -> EstimateEnergyResponse:
        model = self.model_repository.load(request.model_path)
        kind = FEATURE_MODELS.get(model.model_id)
        response = EstimateEnergyResponse()

        for path in request.input_paths:
            if _is_feature_csv(path):
                vector = self.vector_repository.load(path)
                stream_id = _stream_id_from_feature_file(path)
                energy = predict(model, features=vector, row_id=stream_id)
                parts = energy_breakdown(vector, model) if request.breakdown else None
                response.estimates.append(
                    EnergyEstimate(stream_id, model.model_id.value, energy, parts)
                )
                continue

            dataset = self.dataset_repository.load(path)
            for row in dataset.rows:
                vector = row.feature_vector(kind) if kind is not None else None
                energy = predict(model, meta=row.meta, features=vector, row_id=row.stream_id)
                parts = energy_breakdown(vector, model) if request.breakdown and vector is not None else None
                response.estimates.append(
                    EnergyEstimate(row.stream_id, model.model_id.value, energy, parts)
                )

        logger.info(f"⚡ {len(response.estimates)} estimaciones con {model.model_id.value}")
        return response
