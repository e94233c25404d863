"""
Infrastructure Layer - Energy models

Persistencia JSON de modelos, controlador y subcomando `estimate`.
"""

from src.energy_models.infrastructure.commands.estimate_command import register_estimate_command

__all__ = ['register_estimate_command']
