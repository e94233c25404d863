from .integration_service import integrate_decoding_energy, synthesize_power_traces
from .confidence_interval_service import (
    CiDecision,
    student_t_critical,
    ci_stop_decision,
    simulate_measurement_series,
)
from .dataset_generator_service import GeneratedDataset, dataset_capacity, generate_dataset

__all__ = [
    'integrate_decoding_energy',
    'synthesize_power_traces',
    'CiDecision',
    'student_t_critical',
    'ci_stop_decision',
    'simulate_measurement_series',
    'GeneratedDataset',
    'dataset_capacity',
    'generate_dataset',
]
