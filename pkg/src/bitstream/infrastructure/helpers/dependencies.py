"""
Dependencies - Ensamblado de repositorios, casos de uso y controladores (Bitstream).
"""

from src.bitstream.application.use_cases.extract_features_use_case import ExtractFeaturesUseCase
from src.bitstream.infrastructure.data.csv_feature_vector_repository import CsvFeatureVectorRepository
from src.bitstream.infrastructure.data.file_trace_repository import FileTraceRepository


def get_trace_repository() -> FileTraceRepository:
    return FileTraceRepository()


def get_feature_vector_repository() -> CsvFeatureVectorRepository:
    return CsvFeatureVectorRepository()


def get_extract_features_use_case() -> ExtractFeaturesUseCase:
    return ExtractFeaturesUseCase(
        trace_repository=get_trace_repository(),
        vector_repository=get_feature_vector_repository(),
    )


def get_extract_controller():
    # Lazy import para evitar imports circulares
    from src.bitstream.infrastructure.controllers.extract_controller import ExtractController
    return ExtractController(extract_use_case=get_extract_features_use_case())
