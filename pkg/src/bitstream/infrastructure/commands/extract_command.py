"""
Subcomando `extract`: trazas -> CSV de features.
"""

import argparse

from src.bitstream.infrastructure.helpers.dependencies import get_extract_controller
from src.shared.run_config import build_run_config


def _handle(args: argparse.Namespace) -> int:
    config = build_run_config(
        "extract",
        {
            "inputs": args.traces,
            "kind": args.kind,
            "out": args.out,
            "fixed_point_log": args.fixed_point_log,
        },
        args.config,
    )
    return get_extract_controller().extract(config)


def register_extract_command(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "extract", parents=parents, help="Cuenta features FA/FS de trazas de instrumentación"
    )
    parser.add_argument("traces", nargs="+", help="Archivos de traza")
    parser.add_argument("--kind", choices=["FA", "FS"], default=None)
    parser.add_argument("--out", default=None, help="Directorio de salida")
    parser.add_argument("--fixed-point-log", action="store_true", default=None)
    parser.set_defaults(handler=_handle)
