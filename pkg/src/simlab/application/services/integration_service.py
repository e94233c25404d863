"""
IntegrationService - Energía de decodificación como área entre dos curvas de potencia.

E_dec = ∫ (P_dec(t) − P_idle(t)) dt sobre el mismo intervalo, por trapecios.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from scipy import integrate

from src.shared.exceptions import MismatchedTraces
from src.simlab.domain.models.power_trace import PowerTrace

logger = logging.getLogger(__name__)


def integrate_decoding_energy(p_dec: PowerTrace, p_idle: PowerTrace) -> float:
    """
    Integral trapezoidal de P_dec − P_idle. Puede ser negativa; no se valida aquí.

    Raises:
        MismatchedTraces: Si las trazas no comparten periodo y duración
    """
    if not np.isclose(p_dec.sample_period, p_idle.sample_period, rtol=1e-12, atol=0.0):
        raise MismatchedTraces(
            f"periodos distintos ({p_dec.sample_period} s vs {p_idle.sample_period} s)"
        )
    if len(p_dec.samples) != len(p_idle.samples):
        raise MismatchedTraces(
            f"duraciones distintas ({len(p_dec.samples)} vs {len(p_idle.samples)} muestras)"
        )
    difference = p_dec.as_array() - p_idle.as_array()
    return float(integrate.trapezoid(difference, dx=p_dec.sample_period))


def synthesize_power_traces(
    idle_power: float,
    decode_power_extra: float,
    start_s: float,
    duration_s: float,
    total_s: float,
    period_s: float,
    noise_w: float = 0.0,
    seed: Optional[int] = None,
) -> Tuple[PowerTrace, PowerTrace]:
    """
    Par (P_dec, P_idle): línea base de reposo y una meseta de decodificación.

    La meseta ocupa round(duration_s/period_s) muestras a partir de
    round(start_s/period_s); sin ruido la integral es extra·periodo·muestras.
    """
    n_samples = int(round(total_s / period_s)) + 1
    first = int(round(start_s / period_s))
    width = max(1, int(round(duration_s / period_s)))
    if first < 0 or first + width > n_samples:
        raise MismatchedTraces("la meseta de decodificación no cabe en la traza")

    idle = np.full(n_samples, float(idle_power))
    decode = idle.copy()
    decode[first:first + width] += decode_power_extra

    if noise_w > 0:
        rng = np.random.default_rng(seed)
        idle = np.clip(idle + rng.normal(0.0, noise_w, n_samples), 0.0, None)
        decode = np.clip(decode + rng.normal(0.0, noise_w, n_samples), 0.0, None)

    return PowerTrace(period_s, tuple(decode)), PowerTrace(period_s, tuple(idle))
