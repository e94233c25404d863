"""
Subcomando `fit`: dataset CSV -> documento de modelo entrenado.
"""

import argparse

from src.fitting.application.services.fitting_service import SOLVER_CLOSED_FORM, SOLVER_TRUST_REGION
from src.fitting.infrastructure.helpers.dependencies import get_fit_controller
from src.shared.run_config import build_run_config


def _handle(args: argparse.Namespace) -> int:
    config = build_run_config(
        "fit",
        {
            "inputs": [args.dataset],
            "model_ids": [args.model] if args.model else None,
            "seed": args.seed,
            "out": args.out,
            "absolute_residuals": args.absolute_residuals,
            "solver": args.solver,
        },
        args.config,
    )
    return get_fit_controller().fit(config)


def register_fit_command(subparsers, parents) -> None:
    parser = subparsers.add_parser("fit", parents=parents, help="Entrena un modelo de energía")
    parser.add_argument("dataset", help="Dataset CSV")
    parser.add_argument("--model", default=None, help="FA, FS, PE, M, T, H1T, H2T, H2 o H3")
    parser.add_argument("--seed", type=int, default=None, help="Semilla registrada en la procedencia")
    parser.add_argument("--out", default=None, help="Archivo JSON de salida")
    parser.add_argument("--absolute-residuals", action="store_true", default=None,
                        help="MARS con residuos absolutos en lugar de relativos")
    parser.add_argument("--solver", choices=[SOLVER_CLOSED_FORM, SOLVER_TRUST_REGION], default=None)
    parser.set_defaults(handler=_handle)
