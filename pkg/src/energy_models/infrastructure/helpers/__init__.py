from .dependencies import get_estimate_energy_use_case, get_estimate_controller

__all__ = [
    'get_estimate_energy_use_case',
    'get_estimate_controller',
]
