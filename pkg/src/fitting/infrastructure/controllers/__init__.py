from .fit_controller import FitController

__all__ = ['FitController']
