"""
Puerto TruthRepository - Verdad oculta de un dataset sintético.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Dict


class TruthRepository(ABC):

    @abstractmethod
    def save(self, generated, path: Path) -> Path:
        pass

    @abstractmethod
    def load(self, path: Path) -> Dict:
        pass
