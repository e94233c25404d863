from .trained_model_repository import TrainedModelRepository

__all__ = ['TrainedModelRepository']
