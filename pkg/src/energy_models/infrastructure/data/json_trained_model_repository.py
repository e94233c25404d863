"""
Implementación de TrainedModelRepository sobre documentos JSON.

El documento lleva: model_id, parámetros ordenados (nombre/valor),
normalizadores, términos MARS y procedencia. Se escribe con claves
ordenadas para que dos ajustes iguales produzcan bytes idénticos.
"""

import logging
from pathlib import Path
from typing import Dict, Optional, Tuple

from src.energy_models.domain.models.model_catalog import PARAMETER_NAMES, PE_VARIABLES
from src.energy_models.domain.models.trained_model import (
    HingeTerm,
    ModelId,
    Provenance,
    TrainedModel,
)
from src.energy_models.domain.repositories.trained_model_repository import TrainedModelRepository
from src.shared.exceptions import DataException
from src.shared.utils.json_encoder import read_json, write_json

logger = logging.getLogger(__name__)

FORMAT_TAG = "decwatt.trained_model.v1"


def trained_model_to_document(model: TrainedModel, fit_summary: Optional[Dict] = None) -> Dict:
    document = {
        "format": FORMAT_TAG,
        "model_id": model.model_id.value,
        "parameters": [
            {"name": name, "value": value}
            for name, value in zip(model.param_names, model.params)
        ],
        "normalizers": model.normalizers,
        "mars_basis": None,
        "provenance": {
            "seed": model.provenance.seed,
            "fold_spec": model.provenance.fold_spec,
            "dataset_digest": model.provenance.dataset_digest,
        },
    }
    if model.mars_basis is not None:
        document["mars_basis"] = [
            {
                "variable": None if term.variable_index is None else PE_VARIABLES[term.variable_index],
                "variable_index": term.variable_index,
                "direction": term.direction.value,
                "knot": term.knot,
                "coefficient": term.coefficient,
            }
            for term in model.mars_basis
        ]
    if fit_summary is not None:
        document["fit"] = fit_summary
    return document


def expected_parameter_names(model_id: ModelId, count: int) -> Tuple[str, ...]:
    if model_id is ModelId.PE:
        return tuple(f"B{i}" for i in range(count))
    return PARAMETER_NAMES[model_id]


def trained_model_from_document(document: Dict) -> TrainedModel:
    """
    Raises:
        DataException: Documento incompleto o nombres de parámetros ajenos al modelo
    """
    try:
        parameters = document["parameters"]
        basis = document.get("mars_basis")
        provenance = document.get("provenance") or {}
        model_id = ModelId(document["model_id"])
        names = tuple(p["name"] for p in parameters)
        expected = expected_parameter_names(model_id, len(names))
        if names != expected:
            unknown = sorted(set(names) - set(expected))
            detail = f"desconocidos: {', '.join(unknown)}" if unknown else f"se esperaba el orden {', '.join(expected)}"
            raise DataException(f"Parámetros inválidos para {model_id.value} ({detail})")
        return TrainedModel(
            model_id=model_id,
            param_names=names,
            params=tuple(float(p["value"]) for p in parameters),
            normalizers=document.get("normalizers"),
            mars_basis=None if basis is None else tuple(
                HingeTerm(
                    variable_index=term["variable_index"],
                    direction=term["direction"],
                    knot=term["knot"],
                    coefficient=float(term["coefficient"]),
                )
                for term in basis
            ),
            provenance=Provenance(
                seed=provenance.get("seed"),
                fold_spec=provenance.get("fold_spec"),
                dataset_digest=provenance.get("dataset_digest"),
            ),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise DataException(f"Documento de modelo inválido: {e}") from e


class JsonTrainedModelRepository(TrainedModelRepository):

    def save(self, model: TrainedModel, path: Path, fit_summary: Optional[Dict] = None) -> Path:
        path = Path(path)
        write_json(path, trained_model_to_document(model, fit_summary))
        logger.info(f"💾 Modelo {model.model_id.value} guardado en {path}")
        return path

    def load(self, path: Path) -> TrainedModel:
        return trained_model_from_document(read_json(Path(path)))
