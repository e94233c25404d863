from .csv_dataset_repository import CsvDatasetRepository, dataset_to_frame, feature_column

__all__ = [
    'CsvDatasetRepository',
    'dataset_to_frame',
    'feature_column',
]
