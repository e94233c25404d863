from .power_trace import PowerTrace
from .measurement_record import MeasurementRecord
from .generator_config import GeneratorConfig, build_generator_config
from .sequence_catalog import (
    SequenceSpec,
    EVALUATION_SEQUENCES,
    CODING_CONFIGS,
    DEFAULT_QPS,
    EXTENDED_QPS,
    FRAMES_PER_GROUP,
    RESOLUTIONS,
)
from .hidden_parameters import default_parameters, hidden_model

__all__ = [
    'PowerTrace',
    'MeasurementRecord',
    'GeneratorConfig',
    'build_generator_config',
    'SequenceSpec',
    'EVALUATION_SEQUENCES',
    'CODING_CONFIGS',
    'DEFAULT_QPS',
    'EXTENDED_QPS',
    'FRAMES_PER_GROUP',
    'RESOLUTIONS',
    'default_parameters',
    'hidden_model',
]
