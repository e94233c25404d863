from .cv_command import register_cv_command, register_report_command

__all__ = ['register_cv_command', 'register_report_command']
