from .trace_repository import TraceRepository
from .feature_vector_repository import FeatureVectorRepository

__all__ = [
    'TraceRepository',
    'FeatureVectorRepository',
]
