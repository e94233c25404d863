"""
Puerto PowerTraceRepository - Lectura de trazas de potencia medidas.
"""

from abc import ABC, abstractmethod
from pathlib import Path

from src.simlab.domain.models.power_trace import PowerTrace


class PowerTraceRepository(ABC):

    @abstractmethod
    def load(self, path: Path) -> PowerTrace:
        """
        Lee una traza muestreada uniformemente.

        Raises:
            MismatchedTraces: Si la rejilla temporal no es uniforme
        """
        pass
