from .estimate_energy_use_case import (
    EnergyEstimate,
    EstimateEnergyRequest,
    EstimateEnergyResponse,
    EstimateEnergyUseCase,
)

__all__ = [
    'EnergyEstimate',
    'EstimateEnergyRequest',
    'EstimateEnergyResponse',
    'EstimateEnergyUseCase',
]
