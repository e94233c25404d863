"""
Infrastructure Layer - Fitting

Dataset CSV, controlador y subcomando `fit`.
"""

from src.fitting.infrastructure.commands.fit_command import register_fit_command

__all__ = ['register_fit_command']
