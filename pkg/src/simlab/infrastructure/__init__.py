"""
Infrastructure Layer - Simlab

Trazas de potencia CSV, sidecar de verdad oculta y subcomandos `simulate` e `integrate`.
"""

from src.simlab.infrastructure.commands.simulate_command import (
    register_integrate_command,
    register_simulate_command,
)

__all__ = ['register_simulate_command', 'register_integrate_command']
