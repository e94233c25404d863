from .dataset import Dataset, DatasetRow, GroupKey, FitResult

__all__ = [
    'Dataset',
    'DatasetRow',
    'GroupKey',
    'FitResult',
]
