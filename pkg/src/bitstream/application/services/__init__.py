from .feature_counting_service import (
    FeatureCounter,
    count_features,
    aggregate_fa_to_fs,
    exact_log2,
    fixed_point_log2,
)
from .trace_generation_service import TraceSynthesizer, generate_random_trace, pu_sizes

__all__ = [
    'FeatureCounter',
    'count_features',
    'aggregate_fa_to_fs',
    'exact_log2',
    'fixed_point_log2',
    'TraceSynthesizer',
    'generate_random_trace',
    'pu_sizes',
]
