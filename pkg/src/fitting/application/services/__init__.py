from .fitting_service import FitOptions, fit_model, SOLVER_CLOSED_FORM, SOLVER_TRUST_REGION
from .linear_fit_service import fit_linear_relative
from .mars_fit_service import MarsTrainer, fit_mars
from .trust_region_fit_service import fit_trust_region

__all__ = [
    'FitOptions',
    'fit_model',
    'fit_linear_relative',
    'fit_trust_region',
    'fit_mars',
    'MarsTrainer',
    'SOLVER_CLOSED_FORM',
    'SOLVER_TRUST_REGION',
]
