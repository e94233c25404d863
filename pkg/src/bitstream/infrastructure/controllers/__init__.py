from .extract_controller import ExtractController

__all__ = ['ExtractController']
