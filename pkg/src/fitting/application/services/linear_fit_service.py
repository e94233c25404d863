"""
LinearFitService - Ajuste de error relativo en forma cerrada.

Minimiza Σ_m ((ŷ_m − E_m)/E_m)² para modelos lineales en sus parámetros:
equivale a mínimos cuadrados ponderados con pesos 1/E_m sobre el objetivo 1.
"""

import logging
from typing import Optional

import numpy as np

from src.energy_models.domain.models.model_catalog import LINEAR_MODELS, PARAMETER_NAMES
from src.energy_models.domain.models.trained_model import ModelId, Provenance, TrainedModel
from src.fitting.application.services.design_matrix import linear_design
from src.fitting.application.services.least_squares import solve_equilibrated
from src.fitting.domain.models.dataset import Dataset, FitResult
from src.shared.exceptions import InsufficientRows

logger = logging.getLogger(__name__)


def relative_objective(A: np.ndarray, energies: np.ndarray, theta: np.ndarray) -> float:
    residual = (A @ theta - energies) / energies
    return float(residual @ residual)


def fit_linear_relative(
    dataset: Dataset,
    model_id,
    provenance: Optional[Provenance] = None,
) -> FitResult:
    """
    Ajusta un modelo lineal (FA, FS, M, T, H2T, H2) por error relativo.

    Raises:
        InsufficientRows: Menos filas que parámetros
        MissingVariables: Alguna fila no tiene las variables del modelo
        NonPositiveEnergy: Alguna energía <= 0
    """
    model_id = ModelId(model_id)
    if model_id not in LINEAR_MODELS:
        raise ValueError(f"{model_id.value} no admite ajuste lineal")

    names = PARAMETER_NAMES[model_id]
    if len(dataset) < len(names):
        raise InsufficientRows(len(dataset), len(names))

    energies = dataset.energies()
    A = linear_design(dataset, model_id)
    weighted = A / energies[:, None]
    solution = solve_equilibrated(weighted, np.ones(len(energies)))

    if solution.rank < len(names):
        logger.info(f"ℹ️ {model_id.value}: rango {solution.rank} < {len(names)}, solución de norma mínima")

    model = TrainedModel(
        model_id=model_id,
        param_names=names,
        params=tuple(solution.coefficients.tolist()),
        provenance=provenance or Provenance(),
    )
    objective = relative_objective(A, energies, solution.coefficients)
    logger.info(f"✅ Ajuste lineal {model_id.value}: objetivo={objective:.6g} ({len(dataset)} filas)")
    return FitResult(model=model, objective_value=objective, iterations=1, converged=True)
