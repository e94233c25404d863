"""
Entidad MeasurementRecord - Serie de mediciones repetidas de un bit stream.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np


@dataclass(frozen=True)
class MeasurementRecord:
    """
    Muestras de energía y estado del criterio de parada.

    stddev es la desviación típica muestral (denominador m−1).
    """
    stream_id: str
    samples: Tuple[float, ...]
    mean: float
    stddev: float
    m: int
    accepted: bool = False
    delta_c: float = float("nan")

    @classmethod
    def from_samples(cls, stream_id: str, samples: Sequence[float]) -> "MeasurementRecord":
        values = np.asarray(samples, dtype=float)
        stddev = float(np.std(values, ddof=1)) if values.size >= 2 else float("nan")
        return cls(
            stream_id=stream_id,
            samples=tuple(values.tolist()),
            mean=float(np.mean(values)) if values.size else float("nan"),
            stddev=stddev,
            m=int(values.size),
        )
