from .file_trace_repository import FileTraceRepository
from .csv_feature_vector_repository import CsvFeatureVectorRepository

__all__ = [
    'FileTraceRepository',
    'CsvFeatureVectorRepository',
]
