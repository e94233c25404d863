"""
TrustRegionFitService - Ajuste no lineal de error relativo (trust-region-reflective).

Usa scipy.optimize.least_squares(method="trf") con Jacobiano por diferencias
finitas hacia adelante. Sirve para H1T y H3, y también para los modelos
lineales (validación cruzada del solver cerrado).
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Mapping, Optional, Tuple

import numpy as np
from scipy import optimize

from src.energy_models.domain.models.model_catalog import (
    H1T_EXPONENTS,
    LINEAR_MODELS,
    PARAMETER_NAMES,
)
from src.energy_models.domain.models.trained_model import ModelId, Provenance, TrainedModel
from src.fitting.application.services.design_matrix import linear_design, meta_columns
from src.fitting.application.services.least_squares import solve_equilibrated
from src.fitting.domain.models.dataset import Dataset, FitResult
from src.shared.exceptions import (
    BoundViolation,
    DataException,
    InsufficientRows,
    NonPositiveNormalizer,
)

logger = logging.getLogger(__name__)

# Tolerancias fijas para que los ajustes sean reproducibles
DIFF_STEP = 1e-7
FTOL = 1e-15
XTOL = 1e-12
GTOL = 1e-10
MAX_ITERATIONS = 500

Bounds = Mapping[str, Tuple[float, float]]


@dataclass
class _Problem:
    """Residuos relativos, parámetros libres y cómo construir el modelo final."""
    free_names: Tuple[str, ...]
    residuals: Callable[[np.ndarray], np.ndarray]
    default_init: np.ndarray
    fixed: Dict[str, float]


def _h3_problem(dataset: Dataset, energies: np.ndarray) -> _Problem:
    cols = meta_columns(dataset, ModelId.H3, ("S", "N", "b_pixel"))
    pixels = cols["S"] * cols["N"]
    bp = cols["b_pixel"]

    def residuals(theta: np.ndarray) -> np.ndarray:
        C, a, b, gamma = theta
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            estimate = C + pixels * (a + b * np.power(bp, gamma))
        return estimate / energies - 1.0

    per_pixel = float(np.mean(energies / pixels))
    init = np.array([0.0, per_pixel, per_pixel, 1.0])
    return _Problem(PARAMETER_NAMES[ModelId.H3], residuals, init, {})


def _h1t_problem(dataset: Dataset, energies: np.ndarray) -> _Problem:
    cols = meta_columns(dataset, ModelId.H1T, ("S", "f", "qp", "t_dec"))
    normalizers = {
        "S_max": float(np.max(cols["S"])),
        "f_max": float(np.max(cols["f"])),
        "q_min": float(np.min(cols["qp"])),
    }
    for name, value in normalizers.items():
        if not value > 0:
            raise NonPositiveNormalizer(name, value)
    if np.any(cols["t_dec"] <= 0):
        raise DataException("H1T requiere t_dec > 0 en todas las filas")

    log_ratios = np.column_stack([
        np.log(cols["S"] / normalizers["S_max"]),
        np.log(cols["f"] / normalizers["f_max"]),
        np.log(cols["qp"] / normalizers["q_min"]),
    ])
    t_dec = cols["t_dec"]

    def residuals(theta: np.ndarray) -> np.ndarray:
        p_max, exponents = theta[0], theta[1:]
        with np.errstate(over="ignore", invalid="ignore"):
            estimate = p_max * np.exp(log_ratios @ exponents) * t_dec
        return estimate / energies - 1.0

    # Inicialización: regresión lineal de log(E/t_dec) sobre los log-ratios
    design = np.column_stack([np.ones(len(energies)), log_ratios])
    solution = solve_equilibrated(design, np.log(energies / t_dec))
    init = np.concatenate([[np.exp(solution.coefficients[0])], solution.coefficients[1:]])
    return _Problem(H1T_EXPONENTS, residuals, init, normalizers)


def _linear_problem(dataset: Dataset, energies: np.ndarray, model_id: ModelId) -> _Problem:
    A = linear_design(dataset, model_id)
    weighted = A / energies[:, None]

    def residuals(theta: np.ndarray) -> np.ndarray:
        return weighted @ theta - 1.0

    names = PARAMETER_NAMES[model_id]
    return _Problem(names, residuals, np.zeros(len(names)), {})


def _resolve_bounds(names: Tuple[str, ...], bounds: Optional[Bounds]) -> Tuple[np.ndarray, np.ndarray]:
    lower = np.full(len(names), -np.inf)
    upper = np.full(len(names), np.inf)
    for name, (lo, hi) in (bounds or {}).items():
        if name not in names:
            raise BoundViolation(name, lo, hi)
        if not lo < hi:
            raise BoundViolation(name, lo, hi)
        i = names.index(name)
        lower[i], upper[i] = lo, hi
    return lower, upper


def fit_trust_region(
    dataset: Dataset,
    model_id,
    bounds: Optional[Bounds] = None,
    init: Optional[Mapping[str, float]] = None,
    provenance: Optional[Provenance] = None,
) -> FitResult:
    """
    Ajusta un modelo minimizando Σ((ŷ−E)/E)² con trust-region-reflective.

    Args:
        dataset: Filas de entrenamiento
        model_id: H1T, H3 o cualquier modelo lineal
        bounds: Intervalos opcionales por nombre de parámetro
        init: Valores iniciales opcionales por nombre (los demás usan el default)

    Returns:
        FitResult; si no converge se devuelve el mejor punto con converged=False

    Raises:
        BoundViolation: Límites inconsistentes o de un parámetro desconocido
    """
    model_id = ModelId(model_id)
    energies = dataset.energies()

    if model_id is ModelId.H3:
        problem = _h3_problem(dataset, energies)
    elif model_id is ModelId.H1T:
        problem = _h1t_problem(dataset, energies)
    elif model_id in LINEAR_MODELS:
        problem = _linear_problem(dataset, energies, model_id)
    else:
        raise ValueError(f"{model_id.value} no se ajusta por trust-region")

    names = problem.free_names
    if len(dataset) < len(names):
        raise InsufficientRows(len(dataset), len(names))

    lower, upper = _resolve_bounds(names, bounds)
    x0 = problem.default_init.astype(float).copy()
    for name, value in (init or {}).items():
        if name not in names:
            raise DataException(f"Parámetro inicial desconocido para {model_id.value}: {name}")
        x0[names.index(name)] = value
    x0 = np.clip(x0, lower, upper)

    result = optimize.least_squares(
        problem.residuals,
        x0,
        jac="2-point",
        bounds=(lower, upper),
        method="trf",
        diff_step=DIFF_STEP,
        x_scale="jac",
        ftol=FTOL,
        xtol=XTOL,
        gtol=GTOL,
        max_nfev=MAX_ITERATIONS,
    )

    converged = bool(result.status > 0)
    objective = float(2.0 * result.cost)
    if not converged:
        logger.warning(
            f"⚠️ {model_id.value}: sin convergencia tras {result.nfev} iteraciones "
            f"(objetivo={objective:.6g}); se devuelve el mejor punto"
        )

    values = dict(zip(names, result.x.tolist()))
    values.update(problem.fixed)
    all_names = PARAMETER_NAMES[model_id]
    model = TrainedModel(
        model_id=model_id,
        param_names=all_names,
        params=tuple(values[name] for name in all_names),
        provenance=provenance or Provenance(),
    )
    logger.info(f"✅ Trust-region {model_id.value}: objetivo={objective:.6g}, nfev={result.nfev}")
    return FitResult(model=model, objective_value=objective, iterations=int(result.nfev), converged=converged)
