"""
Implementación de TruthRepository: sidecar `<dataset>.truth.json`.
"""

import logging
from pathlib import Path
from typing import Dict

from src.energy_models.infrastructure.data.json_trained_model_repository import trained_model_to_document
from src.simlab.application.services.dataset_generator_service import GeneratedDataset
from src.simlab.domain.repositories.truth_repository import TruthRepository
from src.shared.utils.json_encoder import read_json, write_json

logger = logging.getLogger(__name__)

FORMAT_TAG = "decwatt.hidden_truth.v1"


def truth_path_for(dataset_path: Path) -> Path:
    return Path(dataset_path).with_suffix(".truth.json")


def truth_to_document(generated: GeneratedDataset) -> Dict:
    return {
        "format": FORMAT_TAG,
        "target_model": generated.truth.model_id.value,
        "hidden_model": trained_model_to_document(generated.truth),
        "generator_config": generated.config.model_dump(mode="json"),
        "energy_true": generated.energy_true,
    }


class JsonTruthRepository(TruthRepository):

    def save(self, generated: GeneratedDataset, path: Path) -> Path:
        path = Path(path)
        write_json(path, truth_to_document(generated))
        logger.info(f"💾 Verdad oculta guardada en {path}")
        return path

    def load(self, path: Path) -> Dict:
        return read_json(Path(path))
