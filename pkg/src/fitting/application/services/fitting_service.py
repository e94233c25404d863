"""
FittingService - Punto único de ajuste: elige el solver según el modelo.

    FA, FS, M, T, H2T, H2 → forma cerrada (o trust-region si se pide)
    H1T, H3               → trust-region-reflective
    PE                    → MARS
"""

import logging
from dataclasses import dataclass, field
from typing import Mapping, Optional, Tuple

from src.energy_models.domain.models.model_catalog import LINEAR_MODELS
from src.energy_models.domain.models.trained_model import ModelId, Provenance
from src.fitting.application.services.linear_fit_service import fit_linear_relative
from src.fitting.application.services.mars_fit_service import MarsTrainer, fit_mars
from src.fitting.application.services.trust_region_fit_service import fit_trust_region
from src.fitting.domain.models.dataset import Dataset, FitResult
from src.shared.config import settings

logger = logging.getLogger(__name__)

SOLVER_CLOSED_FORM = "closed_form"
SOLVER_TRUST_REGION = "trust_region"


@dataclass(frozen=True)
class FitOptions:
    """Opciones de ajuste comunes a todos los modelos."""
    absolute_residuals: bool = False
    mars_max_terms: int = field(default_factory=lambda: settings.MARS_MAX_TERMS)
    mars_gcv_penalty: float = field(default_factory=lambda: settings.MARS_GCV_PENALTY)
    mars_max_knots: int = field(default_factory=lambda: settings.MARS_MAX_KNOTS)
    bounds: Optional[Mapping[str, Tuple[float, float]]] = None
    init: Optional[Mapping[str, float]] = None
    solver: str = SOLVER_CLOSED_FORM


def fit_model(
    dataset: Dataset,
    model_id,
    options: Optional[FitOptions] = None,
    provenance: Optional[Provenance] = None,
) -> FitResult:
    """Ajusta `model_id` sobre `dataset` con el solver que le corresponde."""
    model_id = ModelId(model_id)
    options = options or FitOptions()
    logger.debug(f"Ajustando {model_id.value} sobre {len(dataset)} filas")

    if model_id is ModelId.PE:
        trainer = MarsTrainer(
            max_terms=options.mars_max_terms,
            gcv_penalty=options.mars_gcv_penalty,
            max_knots=options.mars_max_knots,
            absolute_residuals=options.absolute_residuals,
        )
        return fit_mars(dataset, provenance=provenance, trainer=trainer)

    use_trust_region = (
        model_id not in LINEAR_MODELS
        or options.solver == SOLVER_TRUST_REGION
        or options.bounds
        or options.init
    )
    if use_trust_region:
        return fit_trust_region(
            dataset, model_id, bounds=options.bounds, init=options.init, provenance=provenance
        )
    return fit_linear_relative(dataset, model_id, provenance=provenance)
