"""
Puerto FeatureVectorRepository - Persistencia de vectores de features.
"""

from abc import ABC, abstractmethod
from pathlib import Path

from src.bitstream.domain.models.feature_vector import FeatureKind, FeatureVector


class FeatureVectorRepository(ABC):

    @abstractmethod
    def save(self, vector: FeatureVector, path: Path) -> Path:
        """Escribe el vector en orden de catálogo."""
        pass

    @abstractmethod
    def load(self, path: Path) -> FeatureVector:
        """
        Lee un vector; el tipo (FA/FS) se deduce de los ids presentes.

        Raises:
            DimensionMismatch: Si los ids no forman un catálogo completo
        """
        pass
