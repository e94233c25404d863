from .dependencies import (
    get_dataset_repository,
    get_trained_model_repository,
    get_fit_model_use_case,
    get_fit_controller,
)

__all__ = [
    'get_dataset_repository',
    'get_trained_model_repository',
    'get_fit_model_use_case',
    'get_fit_controller',
]
