"""
Subcomandos `simulate` e `integrate` del laboratorio simulado.
"""

import argparse

from src.shared.run_config import build_run_config
from src.simlab.infrastructure.helpers.dependencies import get_simlab_controller


def _handle_simulate(args: argparse.Namespace) -> int:
    config = build_run_config(
        "simulate",
        {
            "inputs": [args.generator_config] if args.generator_config else None,
            "model_ids": [args.model] if args.model else None,
            "seed": args.seed,
            "rows": args.rows,
            "noise": args.noise,
            "alpha": args.alpha,
            "beta": args.beta,
            "max_measurements": args.max_measurements,
            "fixed_point_log": args.fixed_point_log,
            "out": args.out,
        },
        args.config,
    )
    return get_simlab_controller().simulate(config)


def _handle_integrate(args: argparse.Namespace) -> int:
    config = build_run_config("integrate", {"inputs": [args.decode_trace, args.idle_trace]}, args.config)
    return get_simlab_controller().integrate(config)


def register_simulate_command(subparsers, parents) -> None:
    parser = subparsers.add_parser("simulate", parents=parents, help="Genera un dataset sintético con verdad oculta")
    parser.add_argument("--generator-config", default=None, help="JSON con la configuración del generador")
    parser.add_argument("--model", default=None, help="Modelo oculto que genera las energías (por defecto FS)")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--rows", type=int, default=None, help="Número de filas (por defecto, todas)")
    parser.add_argument("--noise", type=float, default=None, help="Desviación relativa del ruido de medida")
    parser.add_argument("--alpha", type=float, default=None, help="Nivel de confianza del protocolo")
    parser.add_argument("--beta", type=float, default=None, help="Anchura relativa máxima del intervalo")
    parser.add_argument("--max-measurements", type=int, default=None)
    parser.add_argument("--fixed-point-log", action="store_true", default=None)
    parser.add_argument("--out", default=None, help="CSV de salida")
    parser.set_defaults(handler=_handle_simulate)


def register_integrate_command(subparsers, parents) -> None:
    parser = subparsers.add_parser("integrate", parents=parents, help="Energía entre dos trazas de potencia CSV")
    parser.add_argument("decode_trace", help="CSV time_s,power_w durante la decodificación")
    parser.add_argument("idle_trace", help="CSV time_s,power_w en reposo")
    parser.set_defaults(handler=_handle_integrate)
