"""
Dependencies - Ensamblado de repositorios, casos de uso y controladores (Fitting).
"""

from src.energy_models.infrastructure.data.json_trained_model_repository import JsonTrainedModelRepository
from src.fitting.application.use_cases.fit_model_use_case import FitModelUseCase
from src.fitting.infrastructure.data.csv_dataset_repository import CsvDatasetRepository


def get_dataset_repository() -> CsvDatasetRepository:
    return CsvDatasetRepository()


def get_trained_model_repository() -> JsonTrainedModelRepository:
    return JsonTrainedModelRepository()


def get_fit_model_use_case() -> FitModelUseCase:
    return FitModelUseCase(
        dataset_repository=get_dataset_repository(),
        model_repository=get_trained_model_repository(),
    )


def get_fit_controller():
    # Lazy import para evitar imports circulares
    from src.fitting.infrastructure.controllers.fit_controller import FitController
    return FitController(fit_use_case=get_fit_model_use_case())
