from .fit_model_use_case import FitModelRequest, FitModelResponse, FitModelUseCase

__all__ = [
    'FitModelRequest',
    'FitModelResponse',
    'FitModelUseCase',
]
