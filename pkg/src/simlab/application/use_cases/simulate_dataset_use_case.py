"""
SimulateDatasetUseCase - Genera un dataset sintético y su sidecar de verdad oculta.
"""

import logging
from dataclasses import dataclass
from pathlib import Path

from src.bitstream.domain.models.feature_vector import FeatureKind
from src.fitting.domain.repositories.dataset_repository import DatasetRepository
from src.simlab.application.services.dataset_generator_service import GeneratedDataset, generate_dataset
from src.simlab.domain.models.generator_config import GeneratorConfig
from src.simlab.domain.repositories.truth_repository import TruthRepository

logger = logging.getLogger(__name__)


@dataclass
class SimulateDatasetRequest:
    config: GeneratorConfig
    n_rows: int
    out_path: Path


@dataclass
class SimulateDatasetResponse:
    generated: GeneratedDataset
    dataset_path: Path
    truth_path: Path


class SimulateDatasetUseCase:

    def __init__(self, dataset_repository: DatasetRepository, truth_repository: TruthRepository):
        self.dataset_repository = dataset_repository
        self.truth_repository = truth_repository

    def execute(self, request: SimulateDatasetRequest) -> SimulateDatasetResponse:
        """
        El CSV lleva columnas FA y FS; la verdad va a `<dataset>.truth.json`.

        Raises:
            ConfigInvalid: Configuración o número de filas inválidos
        """
        generated = generate_dataset(request.config, request.n_rows)
        out_path = Path(request.out_path)
        dataset_path = self.dataset_repository.save(
            generated.dataset, out_path, feature_kinds=(FeatureKind.FA, FeatureKind.FS)
        )
        truth_path = self.truth_repository.save(generated, out_path.with_suffix(".truth.json"))
        logger.info(f"✅ Dataset sintético escrito en {dataset_path}")
        return SimulateDatasetResponse(generated=generated, dataset_path=dataset_path, truth_path=truth_path)
