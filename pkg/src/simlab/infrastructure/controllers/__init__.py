from .simlab_controller import SimlabController, generator_config_from_run

__all__ = ['SimlabController', 'generator_config_from_run']
