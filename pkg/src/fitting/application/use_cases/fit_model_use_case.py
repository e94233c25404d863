"""
FitModelUseCase - Entrena un modelo sobre un dataset CSV y guarda el documento.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from src.energy_models.domain.models.trained_model import ModelId, Provenance
from src.energy_models.domain.repositories.trained_model_repository import TrainedModelRepository
from src.fitting.application.services.fitting_service import FitOptions, fit_model
from src.fitting.domain.models.dataset import FitResult
from src.fitting.domain.repositories.dataset_repository import DatasetRepository

logger = logging.getLogger(__name__)


@dataclass
class FitModelRequest:
    """Request para entrenar un modelo"""
    dataset_path: Path
    model_id: ModelId
    out_path: Optional[Path] = None
    seed: Optional[int] = None
    options: Optional[FitOptions] = None


@dataclass
class FitModelResponse:
    result: FitResult
    model_path: Path


class FitModelUseCase:
    """
    Caso de uso: dataset -> modelo entrenado con procedencia.

    El modelo se guarda aunque el ajuste no haya convergido; el resumen del
    ajuste queda en el documento.
    """

    def __init__(self, dataset_repository: DatasetRepository, model_repository: TrainedModelRepository):
        self.dataset_repository = dataset_repository
        self.model_repository = model_repository

    def execute(self, request: FitModelRequest) -> FitModelResponse:
        model_id = ModelId(request.model_id)
        dataset = self.dataset_repository.load(request.dataset_path)
        logger.info(f"🎯 Entrenando {model_id.value} con {len(dataset)} filas de {dataset.name}")

        provenance = Provenance(seed=request.seed, fold_spec="all", dataset_digest=dataset.digest)
        result = fit_model(dataset, model_id, options=request.options, provenance=provenance)

        out_path = request.out_path or Path(f"{dataset.name}.{model_id.value}.model.json")
        out_path.parent.mkdir(parents=True, exist_ok=True)
        self.model_repository.save(result.model, out_path, fit_summary=result.summary())
        return FitModelResponse(result=result, model_path=out_path)
