"""
MarsFitService - Regresión MARS aditiva para el modelo PE.

Paso hacia delante: se parte del término constante y se añaden pares de
hinges reflejados max(0, x−k) / max(0, k−x) sobre una sola variable, el
par que más reduce el RSS en cada paso. Paso hacia atrás: se eliminan
términos uno a uno y se conserva el subconjunto con menor GCV.
Sin interacciones entre variables.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.energy_models.domain.models.trained_model import (
    HingeDirection,
    HingeTerm,
    ModelId,
    Provenance,
    TrainedModel,
)
from src.fitting.application.services.design_matrix import pe_matrix
from src.fitting.application.services.least_squares import solve_equilibrated
from src.fitting.domain.models.dataset import Dataset, FitResult
from src.shared.config import settings
from src.shared.exceptions import InsufficientRows

logger = logging.getLogger(__name__)

# Por debajo de esta fracción de la suma total de cuadrados el ajuste es exacto
EXACT_FIT_RATIO = 1e-20


@dataclass(frozen=True)
class _Candidate:
    variable_index: Optional[int]
    direction: HingeDirection
    knot: Optional[float]

    def column(self, X: np.ndarray) -> np.ndarray:
        return HingeTerm(self.variable_index, self.direction, self.knot, 0.0).basis(X)


def knot_candidates(column: np.ndarray, max_knots: int) -> np.ndarray:
    """
    Valores observados únicos sin los extremos; si son demasiados,
    estadísticos de orden equiespaciados.

    Con un nudo interior el par reflejado no se anula en ningún lado y
    reproduce una tendencia lineal también fuera del rango observado.
    """
    values = np.unique(column)
    if values.size > 2:
        values = values[1:-1]
    if values.size <= max_knots:
        return values
    positions = np.unique(np.round(np.linspace(0, values.size - 1, max_knots)).astype(int))
    return values[positions]


def gcv_score(rss: float, rows: int, terms: int, penalty: float) -> float:
    """GCV = RSS / (M·(1 − C/M)²) con C = términos + penalty·(términos−1)/2."""
    complexity = terms + penalty * (terms - 1) / 2.0
    if complexity >= rows:
        return float("inf")
    return rss / (rows * (1.0 - complexity / rows) ** 2)


class MarsTrainer:
    """
    Entrenador MARS determinista (empates: gana el primer candidato).

    Los residuos son relativos (pesos 1/E) salvo que se pida absoluto.
    """

    def __init__(
        self,
        max_terms: Optional[int] = None,
        gcv_penalty: Optional[float] = None,
        max_knots: Optional[int] = None,
        absolute_residuals: bool = False,
    ):
        self.max_terms = max_terms if max_terms is not None else settings.MARS_MAX_TERMS
        self.gcv_penalty = gcv_penalty if gcv_penalty is not None else settings.MARS_GCV_PENALTY
        self.max_knots = max_knots if max_knots is not None else settings.MARS_MAX_KNOTS
        self.absolute_residuals = absolute_residuals

    def _weights(self, energies: np.ndarray) -> np.ndarray:
        if self.absolute_residuals:
            return np.ones_like(energies)
        return 1.0 / energies

    def _solve(self, columns: List[np.ndarray], weights: np.ndarray, energies: np.ndarray):
        B = np.column_stack(columns)
        return solve_equilibrated(B * weights[:, None], energies * weights)

    def forward(self, X: np.ndarray, energies: np.ndarray) -> Tuple[List[_Candidate], int]:
        """Devuelve los términos elegidos y el número de pasos hacia delante."""
        weights = self._weights(energies)
        target = energies * weights
        tss = float(target @ target)

        terms = [_Candidate(None, HingeDirection.CONSTANT, None)]
        columns = [np.ones(X.shape[0])]
        rss = self._solve(columns, weights, energies).rss
        steps = 0

        while len(terms) + 2 <= self.max_terms:
            if rss <= EXACT_FIT_RATIO * tss:
                break
            best = None
            for var in range(X.shape[1]):
                for knot in knot_candidates(X[:, var], self.max_knots):
                    pair = (
                        _Candidate(var, HingeDirection.POSITIVE, float(knot)),
                        _Candidate(var, HingeDirection.NEGATIVE, float(knot)),
                    )
                    if any(c in terms for c in pair):
                        continue
                    pair_columns = [c.column(X) for c in pair]
                    trial = self._solve(columns + pair_columns, weights, energies).rss
                    if best is None or trial < best[0]:
                        best = (trial, pair, pair_columns)
            if best is None or not best[0] < rss:
                break
            rss, pair, pair_columns = best
            terms.extend(pair)
            columns.extend(pair_columns)
            steps += 1
            logger.debug(f"MARS paso {steps}: var={pair[0].variable_index} nudo={pair[0].knot:.6g} rss={rss:.6g}")

        return terms, steps

    def backward(
        self, X: np.ndarray, energies: np.ndarray, terms: Sequence[_Candidate]
    ) -> List[_Candidate]:
        """Poda por GCV; el término constante nunca se elimina."""
        weights = self._weights(energies)
        rows = X.shape[0]
        current = list(terms)

        def rss_of(subset: Sequence[_Candidate]) -> float:
            return self._solve([c.column(X) for c in subset], weights, energies).rss

        best_subset = list(current)
        best_gcv = self.gcv_of(X, energies, current)

        while len(current) > 1:
            trial_best = None
            for i in range(1, len(current)):
                subset = current[:i] + current[i + 1:]
                trial = rss_of(subset)
                if trial_best is None or trial < trial_best[0]:
                    trial_best = (trial, subset)
            rss, current = trial_best
            gcv = gcv_score(rss, rows, len(current), self.gcv_penalty)
            # <= : a igual GCV se prefiere el modelo con menos términos
            if gcv <= best_gcv:
                best_gcv, best_subset = gcv, list(current)

        return best_subset

    def gcv_of(self, X: np.ndarray, energies: np.ndarray, terms: Sequence[_Candidate]) -> float:
        rss = self._solve([c.column(X) for c in terms], self._weights(energies), energies).rss
        return gcv_score(rss, X.shape[0], len(terms), self.gcv_penalty)

    def fit(self, X: np.ndarray, energies: np.ndarray) -> Tuple[Tuple[HingeTerm, ...], int]:
        terms, steps = self.forward(X, energies)
        kept = self.backward(X, energies, terms)
        weights = self._weights(energies)
        solution = self._solve([c.column(X) for c in kept], weights, energies)
        basis = tuple(
            HingeTerm(c.variable_index, c.direction, c.knot, float(coef))
            for c, coef in zip(kept, solution.coefficients)
        )
        return basis, steps


def fit_mars(
    dataset: Dataset,
    provenance: Optional[Provenance] = None,
    trainer: Optional[MarsTrainer] = None,
) -> FitResult:
    """
    Ajusta el modelo PE (contadores de ejecución) por MARS.

    El objetivo reportado es siempre el error relativo Σ((ŷ−E)/E)², también
    cuando el entrenamiento usó residuos absolutos.
    """
    trainer = trainer or MarsTrainer()
    if len(dataset) < 2:
        raise InsufficientRows(len(dataset), 2)

    energies = dataset.energies()
    X = pe_matrix(dataset)
    basis, steps = trainer.fit(X, energies)

    estimate = np.zeros(len(energies))
    for term in basis:
        estimate += term.coefficient * term.basis(X)
    residual = (estimate - energies) / energies
    objective = float(residual @ residual)

    model = TrainedModel(
        model_id=ModelId.PE,
        param_names=tuple(f"B{i}" for i in range(len(basis))),
        params=tuple(term.coefficient for term in basis),
        mars_basis=basis,
        provenance=provenance or Provenance(),
    )
    logger.info(f"✅ MARS PE: {len(basis)} términos, {steps} pasos, objetivo={objective:.6g}")
    return FitResult(model=model, objective_value=objective, iterations=steps, converged=True)
