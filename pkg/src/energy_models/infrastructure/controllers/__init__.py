from .estimate_controller import EstimateController, format_estimate_line

__all__ = ['EstimateController', 'format_estimate_line']
