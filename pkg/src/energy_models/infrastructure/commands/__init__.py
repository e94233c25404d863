from .estimate_command import register_estimate_command

__all__ = ['register_estimate_command']
