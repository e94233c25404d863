"""
Value Object PowerTrace - Potencia muestreada uniformemente.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.shared.exceptions import DataException


@dataclass(frozen=True)
class PowerTrace:
    """
    Attributes:
        sample_period: Periodo de muestreo en segundos (> 0)
        samples: Potencias en vatios (>= 0)
    """
    sample_period: float
    samples: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "samples", tuple(float(s) for s in self.samples))
        if not np.isfinite(self.sample_period) or self.sample_period <= 0:
            raise DataException(f"Periodo de muestreo inválido: {self.sample_period}")
        if len(self.samples) < 2:
            raise DataException("Una traza de potencia necesita al menos 2 muestras")
        values = self.as_array()
        if not np.all(np.isfinite(values)):
            raise DataException("Traza de potencia con valores no finitos")
        if np.any(values < 0):
            raise DataException("Traza de potencia con valores negativos")

    @property
    def duration(self) -> float:
        return self.sample_period * (len(self.samples) - 1)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.samples, dtype=float)
