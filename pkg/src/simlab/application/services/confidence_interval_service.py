"""
ConfidenceIntervalService - Protocolo de repetición de mediciones.

Se repite la medición hasta que el intervalo de confianza de la media es
menor que una fracción β de la propia media:

    Δc = 2·(σ/√m)·t_α(m−1)   y se acepta si   Δc < β·x̄
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from scipy import stats

from src.shared.config import settings
from src.shared.exceptions import DomainError, NonPositiveMean, TooFewSamples
from src.simlab.domain.models.measurement_record import MeasurementRecord

logger = logging.getLogger(__name__)

OUTLIER_SIGMAS = 3.0
# Tope de extracciones cuando se descartan outliers
MAX_DRAWS_FACTOR = 10


@dataclass(frozen=True)
class CiDecision:
    accepted: bool
    delta_c: float


def student_t_critical(alpha: float, dof: int) -> float:
    """
    Valor crítico bilateral: t tal que CDF(t) = 1 − (1−α)/2.

    Raises:
        DomainError: α fuera de (0, 1) o dof < 1
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha debe estar en (0, 1): {alpha}")
    if dof < 1:
        raise DomainError(f"los grados de libertad deben ser >= 1: {dof}")
    return float(stats.t.ppf(1.0 - (1.0 - alpha) / 2.0, dof))


def ci_stop_decision(
    record: MeasurementRecord,
    alpha: Optional[float] = None,
    beta: Optional[float] = None,
) -> CiDecision:
    """
    Raises:
        TooFewSamples: m < 2
        NonPositiveMean: x̄ <= 0
    """
    alpha = settings.DEFAULT_ALPHA if alpha is None else alpha
    beta = settings.DEFAULT_BETA if beta is None else beta
    if record.m < 2:
        raise TooFewSamples(record.m)
    if not record.mean > 0:
        raise NonPositiveMean(record.mean)

    delta_c = 2.0 * (record.stddev / np.sqrt(record.m)) * student_t_critical(alpha, record.m - 1)
    return CiDecision(accepted=bool(delta_c < beta * record.mean), delta_c=float(delta_c))


def _is_outlier(value: float, kept: List[float]) -> bool:
    if len(kept) < 2:
        return False
    mean, std = float(np.mean(kept)), float(np.std(kept, ddof=1))
    return std > 0 and abs(value - mean) > OUTLIER_SIGMAS * std


def simulate_measurement_series(
    true_energy: float,
    noise_rel_sigma: float,
    seed: int,
    alpha: Optional[float] = None,
    beta: Optional[float] = None,
    max_m: Optional[int] = None,
    drop_outliers: bool = False,
    stream_id: str = "stream",
) -> MeasurementRecord:
    """
    Extrae mediciones E = true·(1 + N(0, σ)) hasta que el criterio acepta o se llega a max_m.

    Con drop_outliers se descartan las muestras a más de 3σ de la media
    de las ya aceptadas.
    """
    max_m = settings.DEFAULT_MAX_MEASUREMENTS if max_m is None else max_m
    rng = np.random.default_rng(seed)
    kept: List[float] = []
    draws = 0
    decision = CiDecision(accepted=False, delta_c=float("nan"))

    while len(kept) < max_m and draws < MAX_DRAWS_FACTOR * max_m:
        value = true_energy * (1.0 + noise_rel_sigma * rng.standard_normal())
        draws += 1
        if drop_outliers and _is_outlier(value, kept):
            logger.debug(f"{stream_id}: outlier descartado ({value:.6g} J)")
            continue
        kept.append(value)
        if len(kept) < 2:
            continue
        record = MeasurementRecord.from_samples(stream_id, kept)
        if not record.mean > 0:
            continue
        decision = ci_stop_decision(record, alpha, beta)
        if decision.accepted:
            break

    record = MeasurementRecord.from_samples(stream_id, kept)
    if not decision.accepted:
        logger.warning(f"⚠️ {stream_id}: intervalo de confianza no alcanzado tras {record.m} mediciones")
    return MeasurementRecord(
        stream_id=stream_id,
        samples=record.samples,
        mean=record.mean,
        stddev=record.stddev,
        m=record.m,
        accepted=decision.accepted,
        delta_c=decision.delta_c,
    )
