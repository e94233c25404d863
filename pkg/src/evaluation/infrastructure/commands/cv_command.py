"""
Subcomandos `cv` y `report`.
"""

import argparse

from src.evaluation.infrastructure.helpers.dependencies import get_evaluation_controller
from src.shared.run_config import build_run_config


def _split_models(raw):
    if raw is None:
        return None
    return [item.strip() for item in raw.split(",") if item.strip()]


def _handle_cv(args: argparse.Namespace) -> int:
    config = build_run_config(
        "cv",
        {
            "inputs": [args.dataset],
            "model_ids": _split_models(args.model),
            "seed": args.seed,
            "folds": args.folds,
            "out": args.out,
            "system": args.system,
            "frame_level": args.frame_level,
            "absolute_residuals": args.absolute_residuals,
        },
        args.config,
    )
    return get_evaluation_controller().cross_validate(config)


def _handle_report(args: argparse.Namespace) -> int:
    config = build_run_config("report", {"inputs": args.reports, "out": args.out}, args.config)
    return get_evaluation_controller().report(config)


def register_cv_command(subparsers, parents) -> None:
    parser = subparsers.add_parser("cv", parents=parents, help="Validación cruzada k-fold")
    parser.add_argument("dataset", help="Dataset CSV")
    parser.add_argument("--model", default=None, help="Lista separada por comas, p. ej. FA,FS,H3")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--folds", type=int, default=None)
    parser.add_argument("--out", default=None, help="Directorio de informes")
    parser.add_argument("--system", default=None, help="Etiqueta del sistema (por defecto, nombre del dataset)")
    parser.add_argument("--frame-level", action="store_true", default=None,
                        help="Diferencia energías por frame antes de validar")
    parser.add_argument("--absolute-residuals", action="store_true", default=None)
    parser.set_defaults(handler=_handle_cv)


def register_report_command(subparsers, parents) -> None:
    parser = subparsers.add_parser("report", parents=parents, help="Tabla sistemas × modelos")
    parser.add_argument("reports", nargs="+", help="Informes JSON de cv")
    parser.add_argument("--out", default=None, help="Directorio de salida")
    parser.set_defaults(handler=_handle_report)
