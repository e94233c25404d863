from .extract_command import register_extract_command

__all__ = ['register_extract_command']
