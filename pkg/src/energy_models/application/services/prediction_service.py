"""
PredictionService - Los nueve estimadores de energía de decodificación.

Todas las funciones son puras y devuelven julios.
"""

import logging
import math
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.bitstream.domain.models.feature_vector import FEATURE_CATALOG, FeatureId, FeatureVector
from src.energy_models.domain.models.bitstream_meta import BitstreamMeta
from src.energy_models.domain.models.model_catalog import (
    FEATURE_MODELS,
    H1T_NORMALIZERS,
    variables_required,
)
from src.energy_models.domain.models.trained_model import HingeTerm, ModelId, TrainedModel
from src.shared.exceptions import (
    DimensionMismatch,
    DomainError,
    MissingVariables,
    NonPositiveNormalizer,
)

logger = logging.getLogger(__name__)


def require_variables(model_id: ModelId, meta: BitstreamMeta, row_id: Optional[str] = None) -> None:
    required = variables_required(model_id).variables
    missing = required - meta.available_variables()
    if missing:
        raise MissingVariables(ModelId(model_id).value, missing, row_id)


def pe_vector(meta: BitstreamMeta) -> np.ndarray:
    return np.array([meta.pe_counts.instruction_fetches, meta.pe_counts.l1d_misses], dtype=float)


# ========================================
# MODELOS DE FEATURES
# ========================================

def predict_feature_linear(features: FeatureVector, energies: Sequence[float]) -> float:
    """Σ n_i·e_i. Las energías específicas pueden ser negativas."""
    energies = np.asarray(energies, dtype=float)
    counts = features.as_array()
    if energies.shape != counts.shape:
        raise DimensionMismatch(counts.size, energies.size, f"energías del modelo {features.model_kind.value}")
    return float(np.dot(counts, energies))


def energy_breakdown(features: FeatureVector, model: TrainedModel) -> List[Tuple[FeatureId, float]]:
    """
    Contribución n_i·e_i de cada feature, de mayor a menor magnitud.
    """
    kind = FEATURE_MODELS.get(model.model_id)
    if kind is None or features.model_kind is not kind:
        expected = len(FEATURE_CATALOG[kind]) if kind is not None else len(model.params)
        raise DimensionMismatch(expected, len(features.ids), "desglose por features")
    contributions = [
        (fid, features.counts[fid] * energy)
        for fid, energy in zip(features.ids, model.params)
    ]
    # sorted es estable: a igual magnitud se conserva el orden del catálogo
    return sorted(contributions, key=lambda item: -abs(item[1]))


# ========================================
# MODELOS DE EJECUCIÓN
# ========================================

def predict_mars(meta: BitstreamMeta, basis: Sequence[HingeTerm]) -> float:
    """Σ c_j·B_j(x) con x = (instruction_fetches, l1d_misses)."""
    require_variables(ModelId.PE, meta)
    x = pe_vector(meta)[None, :]
    return float(sum(term.coefficient * term.basis(x)[0] for term in basis))


def predict_ram(meta: BitstreamMeta, e_ra: float, e_wa: float) -> float:
    """Solo energía de acceso; sin término de reposo ni de refresco."""
    require_variables(ModelId.M, meta)
    return e_ra * meta.mem_counts.ram_reads + e_wa * meta.mem_counts.ram_writes


def predict_time(meta: BitstreamMeta, E_0: float, P_mean: float) -> float:
    require_variables(ModelId.T, meta)
    return E_0 + P_mean * meta.decode_time


def predict_h1t(meta: BitstreamMeta, params: Mapping[str, float], normalizers: Mapping[str, float]) -> float:
    """P_max·(S/S_max)^c_S·(f/f_max)^c_f·(q/q_min)^c_q·t_dec."""
    require_variables(ModelId.H1T, meta)
    for name in H1T_NORMALIZERS:
        if not normalizers[name] > 0:
            raise NonPositiveNormalizer(name, normalizers[name])
    ratios = {
        "c_S": meta.frame_size / normalizers["S_max"],
        "c_f": meta.frame_rate / normalizers["f_max"],
        "c_q": meta.qp / normalizers["q_min"],
    }
    for exponent, ratio in ratios.items():
        if not ratio > 0:
            raise DomainError(f"base {ratio} no positiva para el exponente {exponent}")
    power = params["P_max"] * math.prod(ratio ** params[exponent] for exponent, ratio in ratios.items())
    return float(power * meta.decode_time)


def predict_h2t(meta: BitstreamMeta, c: Sequence[float]) -> float:
    require_variables(ModelId.H2T, meta)
    c1, c2, c3, c4 = c
    alpha, b = meta.intra_fraction, meta.bitrate
    return (c1 * alpha * b + c2 * alpha + c3 * b + c4) * meta.decode_time


# ========================================
# MODELOS SIN EJECUCIÓN
# ========================================

def predict_h2(meta: BitstreamMeta, c: Sequence[float]) -> float:
    c1, c2, c3, c4 = c
    alpha, bp = meta.intra_fraction, meta.bits_per_pixel
    return (c1 * alpha * bp + c2 * alpha + c3 * bp + c4) * meta.num_frames * meta.frame_size


def predict_h3(meta: BitstreamMeta, params: Mapping[str, float]) -> float:
    """C + S·N·(h3_alpha + h3_beta·b_pixel^gamma)."""
    bp, gamma = meta.bits_per_pixel, params["gamma"]
    if bp < 0 or (bp == 0 and gamma < 0):
        raise DomainError(f"b_pixel={bp} con gamma={gamma} fuera de dominio")
    pixels = meta.frame_size * meta.num_frames
    return float(params["C"] + pixels * (params["h3_alpha"] + params["h3_beta"] * bp ** gamma))


# ========================================
# DISPATCH
# ========================================

def predict(
    model: TrainedModel,
    meta: Optional[BitstreamMeta] = None,
    features: Optional[FeatureVector] = None,
    row_id: Optional[str] = None,
) -> float:
    """
    Estima la energía de un bit stream con un modelo entrenado.

    Raises:
        MissingVariables: Si faltan las variables del modelo
        DimensionMismatch: Si el vector de features no es del tipo del modelo
    """
    model_id = model.model_id
    kind = FEATURE_MODELS.get(model_id)
    if kind is not None:
        if features is None:
            raise MissingVariables(model_id.value, {f"features {kind.value}"}, row_id)
        if features.model_kind is not kind:
            raise DimensionMismatch(len(model.params), len(features.ids), f"vector para {model_id.value}")
        return predict_feature_linear(features, model.params)

    if meta is None:
        raise MissingVariables(model_id.value, variables_required(model_id).variables, row_id)
    require_variables(model_id, meta, row_id)

    p: Dict[str, float] = model.as_dict()
    if model_id is ModelId.PE:
        return predict_mars(meta, model.mars_basis)
    if model_id is ModelId.M:
        return predict_ram(meta, p["e_ra"], p["e_wa"])
    if model_id is ModelId.T:
        return predict_time(meta, p["E_0"], p["P_mean"])
    if model_id is ModelId.H1T:
        return predict_h1t(meta, p, model.normalizers)
    if model_id is ModelId.H2T:
        return predict_h2t(meta, model.params)
    if model_id is ModelId.H2:
        return predict_h2(meta, model.params)
    return predict_h3(meta, p)
