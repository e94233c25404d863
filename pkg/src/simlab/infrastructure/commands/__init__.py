from .simulate_command import register_integrate_command, register_simulate_command

__all__ = ['register_simulate_command', 'register_integrate_command']
