from .csv_power_trace_repository import CsvPowerTraceRepository, power_trace_to_frame
from .json_truth_repository import JsonTruthRepository, truth_path_for, truth_to_document

__all__ = [
    'CsvPowerTraceRepository',
    'power_trace_to_frame',
    'JsonTruthRepository',
    'truth_path_for',
    'truth_to_document',
]
