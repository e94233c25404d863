"""
RenderReportUseCase - Une informes de CV (de uno o varios sistemas) en una tabla.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence

from src.evaluation.application.services.report_renderer import render_report
from src.evaluation.domain.models.cv_report import CvReport
from src.evaluation.domain.repositories.cv_report_repository import CvReportRepository

logger = logging.getLogger(__name__)

REPORT_CSV = "report.csv"
REPORT_TXT = "report.txt"


def write_report_files(reports: Sequence[CvReport], out_dir: Path) -> str:
    """Escribe report.csv y report.txt; devuelve la tabla de texto."""
    document = render_report(reports)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / REPORT_CSV).write_text(document.csv_text, encoding="utf-8")
    (out_dir / REPORT_TXT).write_text(document.text, encoding="utf-8")
    logger.info(f"📋 Tabla {len(document.systems)}×{len(document.models)} escrita en {out_dir}")
    return document.text


@dataclass
class RenderReportRequest:
    report_paths: List[Path]
    out_dir: Path


class RenderReportUseCase:

    def __init__(self, report_repository: CvReportRepository):
        self.report_repository = report_repository

    def execute(self, request: RenderReportRequest) -> str:
        reports = [self.report_repository.load(path) for path in request.report_paths]
        return write_report_files(reports, request.out_dir)
