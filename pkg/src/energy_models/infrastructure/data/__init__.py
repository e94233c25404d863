from .json_trained_model_repository import (
    JsonTrainedModelRepository,
    trained_model_from_document,
    trained_model_to_document,
)

__all__ = [
    'JsonTrainedModelRepository',
    'trained_model_from_document',
    'trained_model_to_document',
]
