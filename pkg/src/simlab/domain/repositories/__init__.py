from .power_trace_repository import PowerTraceRepository
from .truth_repository import TruthRepository

__all__ = [
    'PowerTraceRepository',
    'TruthRepository',
]
