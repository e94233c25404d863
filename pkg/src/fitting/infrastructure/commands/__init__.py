from .fit_command import register_fit_command

__all__ = ['register_fit_command']
