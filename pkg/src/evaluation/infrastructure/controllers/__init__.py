from .evaluation_controller import EvaluationController

__all__ = ['EvaluationController']
