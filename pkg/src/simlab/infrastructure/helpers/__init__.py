from .dependencies import (
    get_simulate_dataset_use_case,
    get_integrate_energy_use_case,
    get_simlab_controller,
)

__all__ = [
    'get_simulate_dataset_use_case',
    'get_integrate_energy_use_case',
    'get_simlab_controller',
]
