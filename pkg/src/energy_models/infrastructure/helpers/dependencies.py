"""
Dependencies - Ensamblado de repositorios, casos de uso y controladores (Energy models).
"""

from src.bitstream.infrastructure.data.csv_feature_vector_repository import CsvFeatureVectorRepository
from src.energy_models.application.use_cases.estimate_energy_use_case import EstimateEnergyUseCase
from src.energy_models.infrastructure.data.json_trained_model_repository import JsonTrainedModelRepository
from src.fitting.infrastructure.data.csv_dataset_repository import CsvDatasetRepository


def get_estimate_energy_use_case() -> EstimateEnergyUseCase:
    return EstimateEnergyUseCase(
        model_repository=JsonTrainedModelRepository(),
        vector_repository=CsvFeatureVectorRepository(),
        dataset_repository=CsvDatasetRepository(),
    )


def get_estimate_controller():
    # Lazy import para evitar imports circulares
    from src.energy_models.infrastructure.controllers.estimate_controller import EstimateController
    return EstimateController(estimate_use_case=get_estimate_energy_use_case())
