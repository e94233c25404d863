from .extract_features_use_case import (
    ExtractFeaturesRequest,
    ExtractFeaturesResponse,
    ExtractFeaturesUseCase,
)

__all__ = [
    'ExtractFeaturesRequest',
    'ExtractFeaturesResponse',
    'ExtractFeaturesUseCase',
]
