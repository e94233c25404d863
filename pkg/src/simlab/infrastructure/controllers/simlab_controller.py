"""
SimlabController - Adaptador de los subcomandos `simulate` e `integrate`.
"""

import logging
from pathlib import Path

from src.shared.exceptions import EXIT_OK, ConfigInvalid, DataException, UsageException
from src.shared.run_config import RunConfig
from src.shared.utils.json_encoder import read_json
from src.simlab.application.services.dataset_generator_service import dataset_capacity
from src.simlab.application.use_cases.integrate_energy_use_case import IntegrateEnergyRequest
from src.simlab.application.use_cases.simulate_dataset_use_case import SimulateDatasetRequest
from src.simlab.domain.models.generator_config import GeneratorConfig, build_generator_config

logger = logging.getLogger(__name__)

DEFAULT_DATASET_NAME = "simulated.csv"

# Campo de RunConfig -> campo de GeneratorConfig
_RUN_TO_GENERATOR = {
    "seed": "seed",
    "noise": "noise_rel_sigma",
    "alpha": "alpha",
    "beta": "beta",
    "max_measurements": "max_m",
    "fixed_point_log": "fixed_point_log",
}


def generator_config_from_run(config: RunConfig) -> GeneratorConfig:
    """
    Combina el JSON de --generator-config con las opciones indicadas explícitamente.

    Solo los campos presentes en la invocación (flags o archivo --config)
    reemplazan los del JSON.

    Raises:
        ConfigInvalid: JSON inválido o valores fuera de rango
    """
    base = {}
    if config.inputs:
        path = Path(config.inputs[0])
        try:
            base = read_json(path)
        except ValueError as e:
            raise ConfigInvalid(f"{path.name}: JSON inválido ({e})") from e
        if not isinstance(base, dict):
            raise ConfigInvalid(f"{path.name}: se esperaba un objeto JSON")

    explicit = config.model_fields_set
    overrides = {
        target: getattr(config, source)
        for source, target in _RUN_TO_GENERATOR.items()
        if source in explicit or target not in base
    }
    if config.model_ids:
        overrides["target_model"] = config.model_ids[0].upper()
    return build_generator_config(base, **overrides)


class SimlabController:

    def __init__(self, simulate_use_case, integrate_use_case):
        self.simulate_use_case = simulate_use_case
        self.integrate_use_case = integrate_use_case

    def simulate(self, config: RunConfig) -> int:
        try:
            generator_config = generator_config_from_run(config)
            n_rows = config.rows if config.rows is not None else dataset_capacity(generator_config)
            request = SimulateDatasetRequest(
                config=generator_config,
                n_rows=n_rows,
                out_path=Path(config.out or DEFAULT_DATASET_NAME),
            )
            response = self.simulate_use_case.execute(request)
        except OSError as e:
            raise DataException(f"Error de E/S: {e}") from e

        print(response.dataset_path)
        return EXIT_OK

    def integrate(self, config: RunConfig) -> int:
        if len(config.inputs) != 2:
            raise UsageException("integrate necesita la traza de decodificación y la traza en reposo")
        request = IntegrateEnergyRequest(
            decode_trace_path=Path(config.inputs[0]),
            idle_trace_path=Path(config.inputs[1]),
        )
        try:
            energy = self.integrate_use_case.execute(request)
        except OSError as e:
            raise DataException(f"Error de E/S: {e}") from e

        print(f"{energy:.6g} J")
        return EXIT_OK
