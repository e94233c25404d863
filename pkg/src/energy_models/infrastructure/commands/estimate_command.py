"""
Subcomando `estimate`: modelo entrenado + features/dataset -> energías en julios.
"""

import argparse

from src.energy_models.infrastructure.helpers.dependencies import get_estimate_controller
from src.shared.run_config import build_run_config


def _handle(args: argparse.Namespace) -> int:
    config = build_run_config(
        "estimate",
        {
            "inputs": [args.model_file, *args.inputs],
            "breakdown": args.breakdown,
        },
        args.config,
    )
    return get_estimate_controller().estimate(config)


def register_estimate_command(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "estimate", parents=parents, help="Estima la energía de decodificación con un modelo entrenado"
    )
    parser.add_argument("model_file", help="Documento JSON del modelo")
    parser.add_argument("inputs", nargs="+", help="CSV de features o dataset CSV")
    parser.add_argument("--breakdown", action="store_true", default=None,
                        help="Desglose de la energía por feature (FA/FS)")
    parser.set_defaults(handler=_handle)
