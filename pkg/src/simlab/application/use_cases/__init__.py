from .simulate_dataset_use_case import (
    SimulateDatasetRequest,
    SimulateDatasetResponse,
    SimulateDatasetUseCase,
)
from .integrate_energy_use_case import IntegrateEnergyRequest, IntegrateEnergyUseCase

__all__ = [
    'SimulateDatasetRequest',
    'SimulateDatasetResponse',
    'SimulateDatasetUseCase',
    'IntegrateEnergyRequest',
    'IntegrateEnergyUseCase',
]
