"""
Puerto DatasetRepository - Lectura y escritura de datasets.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Iterable

from src.bitstream.domain.models.feature_vector import FeatureKind
from src.fitting.domain.models.dataset import Dataset


class DatasetRepository(ABC):

    @abstractmethod
    def load(self, path: Path) -> Dataset:
        """
        Lee un dataset. El nombre del dataset es el nombre del archivo sin
        extensión y el digest es el hash del contenido.
        """
        pass

    @abstractmethod
    def save(self, dataset: Dataset, path: Path, feature_kinds: Iterable[FeatureKind] = ()) -> Path:
        pass
