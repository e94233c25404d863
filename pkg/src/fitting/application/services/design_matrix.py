"""
Design matrices - Variables de cada fila convertidas en matrices numpy.

Para los modelos lineales en sus parámetros (FA, FS, M, T, H2T, H2) la
energía estimada es A @ θ, con una columna por parámetro.
"""

import numpy as np

from src.energy_models.application.services.prediction_service import pe_vector, require_variables
from src.energy_models.domain.models.model_catalog import FEATURE_MODELS, LINEAR_MODELS
from src.energy_models.domain.models.trained_model import ModelId
from src.fitting.domain.models.dataset import Dataset, DatasetRow
from src.shared.exceptions import MissingVariables


def _linear_row(row: DatasetRow, model_id: ModelId) -> np.ndarray:
    meta = row.meta
    kind = FEATURE_MODELS.get(model_id)
    if kind is not None:
        vector = row.feature_vector(kind)
        if vector is None:
            raise MissingVariables(model_id.value, {f"features {kind.value}"}, row.stream_id)
        return vector.as_array()

    require_variables(model_id, meta, row.stream_id)
    if model_id is ModelId.M:
        return np.array([meta.mem_counts.ram_reads, meta.mem_counts.ram_writes])
    if model_id is ModelId.T:
        return np.array([1.0, meta.decode_time])
    if model_id is ModelId.H2T:
        alpha, b, t = meta.intra_fraction, meta.bitrate, meta.decode_time
        return np.array([alpha * b * t, alpha * t, b * t, t])
    # H2
    alpha, bp = meta.intra_fraction, meta.bits_per_pixel
    pixels = float(meta.num_frames * meta.frame_size)
    return np.array([alpha * bp * pixels, alpha * pixels, bp * pixels, pixels])


def linear_design(dataset: Dataset, model_id) -> np.ndarray:
    """Matriz A (M x P) tal que la estimación es A @ θ."""
    model_id = ModelId(model_id)
    if model_id not in LINEAR_MODELS:
        raise ValueError(f"{model_id.value} no es lineal en sus parámetros")
    return np.vstack([_linear_row(row, model_id) for row in dataset.rows])


def meta_columns(dataset: Dataset, model_id, names) -> dict:
    """Columnas de variables de alto nivel, validando que estén presentes."""
    model_id = ModelId(model_id)
    for row in dataset.rows:
        require_variables(model_id, row.meta, row.stream_id)
    getters = {
        "S": lambda m: m.frame_size,
        "N": lambda m: m.num_frames,
        "f": lambda m: m.frame_rate,
        "qp": lambda m: m.qp,
        "b_pixel": lambda m: m.bits_per_pixel,
        "t_dec": lambda m: m.decode_time,
    }
    return {name: np.array([getters[name](row.meta) for row in dataset.rows], dtype=float) for name in names}


def pe_matrix(dataset: Dataset) -> np.ndarray:
    for row in dataset.rows:
        require_variables(ModelId.PE, row.meta, row.stream_id)
    return np.vstack([pe_vector(row.meta) for row in dataset.rows])
