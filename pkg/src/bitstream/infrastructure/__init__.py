"""
Infrastructure Layer - Bitstream

Codec de trazas, repositorios de archivos, controlador y subcomando `extract`.
"""

from src.bitstream.infrastructure.commands.extract_command import register_extract_command

__all__ = ['register_extract_command']
