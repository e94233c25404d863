"""
Puerto TrainedModelRepository - Persistencia de modelos entrenados.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Dict, Optional

from src.energy_models.domain.models.trained_model import TrainedModel


class TrainedModelRepository(ABC):

    @abstractmethod
    def save(self, model: TrainedModel, path: Path, fit_summary: Optional[Dict] = None) -> Path:
        """
        Guarda el modelo como documento autodescriptivo.

        Args:
            model: Modelo entrenado
            path: Archivo destino
            fit_summary: Objetivo, iteraciones y convergencia del ajuste (opcional)
        """
        pass

    @abstractmethod
    def load(self, path: Path) -> TrainedModel:
        pass
