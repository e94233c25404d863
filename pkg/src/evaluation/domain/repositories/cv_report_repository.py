"""
Puerto CvReportRepository - Persistencia de informes de validación cruzada.
"""

from abc import ABC, abstractmethod
from pathlib import Path

from src.evaluation.domain.models.cv_report import CvReport


class CvReportRepository(ABC):

    @abstractmethod
    def save(self, report: CvReport, path: Path) -> Path:
        pass

    @abstractmethod
    def load(self, path: Path) -> CvReport:
        pass
