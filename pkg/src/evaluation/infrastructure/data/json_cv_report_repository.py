"""
Implementación de CvReportRepository sobre documentos JSON.
"""

import logging
from pathlib import Path
from typing import Dict

from src.evaluation.domain.models.cv_report import CvReport, cv_report_filename
from src.evaluation.domain.repositories.cv_report_repository import CvReportRepository
from src.shared.exceptions import DataException
from src.shared.utils.json_encoder import read_json, write_json

logger = logging.getLogger(__name__)

FORMAT_TAG = "decwatt.cv_report.v1"


def cv_report_to_document(report: CvReport) -> Dict:
    return {
        "format": FORMAT_TAG,
        "model_id": report.model_id,
        "system": report.system,
        "seed": report.seed,
        "folds": report.folds,
        "frame_level": report.frame_level,
        "dropped_rows": report.dropped_rows,
        "mean_abs_error": report.mean_abs_error,
        "mean_abs_error_percent": round(100 * report.mean_abs_error, 2),
        "fold_assignment": report.fold_assignment,
        "per_fold_errors": [list(errors) for errors in report.per_fold_errors],
        "row_errors": report.row_errors,
    }


def cv_report_from_document(document: Dict) -> CvReport:
    try:
        return CvReport(
            model_id=str(document["model_id"]),
            system=str(document["system"]),
            per_fold_errors=tuple(tuple(float(e) for e in fold) for fold in document["per_fold_errors"]),
            fold_assignment={str(k): int(v) for k, v in document["fold_assignment"].items()},
            mean_abs_error=float(document["mean_abs_error"]),
            seed=int(document["seed"]),
            folds=int(document["folds"]),
            frame_level=bool(document.get("frame_level", False)),
            dropped_rows=int(document.get("dropped_rows", 0)),
            row_errors={str(k): float(v) for k, v in (document.get("row_errors") or {}).items()},
        )
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise DataException(f"Informe de CV inválido: {e}") from e


class JsonCvReportRepository(CvReportRepository):

    def save(self, report: CvReport, path: Path) -> Path:
        path = Path(path)
        write_json(path, cv_report_to_document(report))
        logger.info(f"💾 Informe {report.system}/{report.model_id} guardado en {path}")
        return path

    def load(self, path: Path) -> CvReport:
        return cv_report_from_document(read_json(Path(path)))
