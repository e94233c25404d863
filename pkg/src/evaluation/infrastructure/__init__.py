"""
Infrastructure Layer - Evaluation

Informes JSON, controlador y subcomandos `cv` y `report`.
"""

from src.evaluation.infrastructure.commands.cv_command import register_cv_command, register_report_command

__all__ = ['register_cv_command', 'register_report_command']
