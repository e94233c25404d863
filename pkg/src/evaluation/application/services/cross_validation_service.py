"""
CrossValidationService - Validación cruzada k-fold con permutación sembrada.
"""

import logging
from typing import List, Optional

import numpy as np

from src.energy_models.application.services.prediction_service import predict
from src.energy_models.domain.models.model_catalog import FEATURE_MODELS
from src.energy_models.domain.models.trained_model import ModelId, Provenance, TrainedModel
from src.evaluation.application.services.error_metrics import mean_abs_error, relative_error
from src.evaluation.domain.models.cv_report import CvReport
from src.fitting.application.services.fitting_service import FitOptions, fit_model
from src.fitting.domain.models.dataset import Dataset, DatasetRow
from src.shared.config import settings
from src.shared.exceptions import TooFewRows

logger = logging.getLogger(__name__)


def assign_folds(rows: int, folds: int, seed: int) -> np.ndarray:
    """fold[perm[j]] = j mod folds; los tamaños difieren como mucho en 1."""
    permutation = np.random.default_rng(seed).permutation(rows)
    assignment = np.empty(rows, dtype=int)
    assignment[permutation] = np.arange(rows) % folds
    return assignment


def predict_row(model: TrainedModel, row: DatasetRow) -> float:
    kind = FEATURE_MODELS.get(model.model_id)
    features = row.feature_vector(kind) if kind is not None else None
    return predict(model, meta=row.meta, features=features, row_id=row.stream_id)


def cross_validate(
    dataset: Dataset,
    model_id,
    seed: int,
    folds: Optional[int] = None,
    options: Optional[FitOptions] = None,
    system: Optional[str] = None,
    frame_level: bool = False,
    dropped_rows: int = 0,
) -> CvReport:
    """
    Entrena en k−1 folds, evalúa en el restante y acumula ε por fila.

    Raises:
        TooFewRows: Menos filas que folds
    """
    model_id = ModelId(model_id)
    folds = folds if folds is not None else settings.DEFAULT_FOLDS
    if len(dataset) < folds:
        raise TooFewRows(len(dataset), folds)

    energies = dataset.energies()
    assignment = assign_folds(len(dataset), folds, seed)
    per_fold: List[tuple] = []
    row_errors = {}

    for fold in range(folds):
        held_out = np.flatnonzero(assignment == fold)
        training = dataset.subset(np.flatnonzero(assignment != fold))
        provenance = Provenance(seed=seed, fold_spec=f"{fold}/{folds}", dataset_digest=dataset.digest)
        result = fit_model(training, model_id, options=options, provenance=provenance)
        if not result.converged:
            logger.warning(f"⚠️ Fold {fold}: {model_id.value} sin convergencia, se evalúa el mejor punto")

        errors = []
        for index in held_out:
            row = dataset.rows[index]
            error = relative_error(predict_row(result.model, row), energies[index])
            errors.append(error)
            row_errors[row.stream_id] = error
        per_fold.append(tuple(errors))
        logger.debug(f"Fold {fold}: {len(held_out)} filas, ε̄={mean_abs_error(errors):.4g}")

    report = CvReport(
        model_id=model_id.value,
        system=system or dataset.name,
        per_fold_errors=tuple(per_fold),
        fold_assignment={row.stream_id: int(fold) for row, fold in zip(dataset.rows, assignment)},
        mean_abs_error=mean_abs_error(row_errors.values()),
        seed=seed,
        folds=folds,
        frame_level=frame_level,
        dropped_rows=dropped_rows,
        row_errors=row_errors,
    )
    logger.info(f"📈 CV {model_id.value} ({report.system}): ε̄={100 * report.mean_abs_error:.2f}%")
    return report
