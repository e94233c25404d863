"""
Puerto TraceRepository - Contrato para leer y escribir trazas de instrumentación.
"""

from abc import ABC, abstractmethod
from pathlib import Path

from src.bitstream.domain.models.syntax_event import SyntaxEventTrace


class TraceRepository(ABC):
    """
    Interface (puerto) para el almacenamiento de trazas.

    La implementación concreta (archivos de texto) está en infrastructure/data/
    """

    @abstractmethod
    def load(self, path: Path) -> SyntaxEventTrace:
        """
        Lee y valida una traza.

        Args:
            path: Archivo de traza; su nombre (sin extensión) es el stream_id

        Returns:
            SyntaxEventTrace
        """
        pass

    @abstractmethod
    def save(self, trace: SyntaxEventTrace, path: Path) -> Path:
        pass
