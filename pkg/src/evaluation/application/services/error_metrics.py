"""
Métricas de error relativo.
"""

from typing import Iterable

import numpy as np

from src.shared.exceptions import EmptyList, NonPositiveEnergy


def relative_error(estimate: float, measured: float) -> float:
    """(Ê − E)/E con signo."""
    if not measured > 0:
        raise NonPositiveEnergy(measured)
    return (estimate - measured) / measured


def mean_abs_error(errors: Iterable[float]) -> float:
    """(1/M)·Σ|ε_m|"""
    values = np.asarray(list(errors), dtype=float)
    if values.size == 0:
        raise EmptyList()
    return float(np.mean(np.abs(values)))
