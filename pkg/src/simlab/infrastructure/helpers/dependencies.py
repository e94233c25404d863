"""
Dependencies - Ensamblado de repositorios, casos de uso y controladores (Simlab).
"""

from src.fitting.infrastructure.data.csv_dataset_repository import CsvDatasetRepository
from src.simlab.application.use_cases.integrate_energy_use_case import IntegrateEnergyUseCase
from src.simlab.application.use_cases.simulate_dataset_use_case import SimulateDatasetUseCase
from src.simlab.infrastructure.data.csv_power_trace_repository import CsvPowerTraceRepository
from src.simlab.infrastructure.data.json_truth_repository import JsonTruthRepository


def get_simulate_dataset_use_case() -> SimulateDatasetUseCase:
    return SimulateDatasetUseCase(
        dataset_repository=CsvDatasetRepository(),
        truth_repository=JsonTruthRepository(),
    )


def get_integrate_energy_use_case() -> IntegrateEnergyUseCase:
    return IntegrateEnergyUseCase(trace_repository=CsvPowerTraceRepository())


def get_simlab_controller():
    # Lazy import para evitar imports circulares
    from src.simlab.infrastructure.controllers.simlab_controller import SimlabController
    return SimlabController(
        simulate_use_case=get_simulate_dataset_use_case(),
        integrate_use_case=get_integrate_energy_use_case(),
    )
