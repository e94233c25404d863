"""
Main Application - decwatt

Estimación de la energía de decodificación de bitstreams HEVC desde la línea de comandos.

Uso:
    python main.py <subcomando> [opciones]

Subcomandos: extract, estimate, fit, cv, report, simulate, integrate.
Códigos de salida: 0 éxito, 1 uso, 2 datos, 3 numérico.
"""

import argparse
import logging
import sys
from typing import List, Optional

import numpy as np

from src.shared.config import settings
from src.shared.exceptions import EXIT_DATA, EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, AppException

from src.bitstream.infrastructure import register_extract_command
from src.energy_models.infrastructure import register_estimate_command
from src.fitting.infrastructure import register_fit_command
from src.evaluation.infrastructure import register_cv_command, register_report_command
from src.simlab.infrastructure import register_integrate_command, register_simulate_command

logger = logging.getLogger("decwatt")


class _UsageArgumentParser(argparse.ArgumentParser):
    """argparse sale con código 2 por defecto; aquí un error de uso es 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def configure_logging(level: Optional[str] = None) -> None:
    """Logs a stderr; stdout y los archivos de salida quedan deterministas."""
    logging.basicConfig(
        level=(level or settings.LOG).upper(),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


# ========================================
# CREAR PARSER
# ========================================

def build_parser() -> argparse.ArgumentParser:
    common = _UsageArgumentParser(add_help=False)
    common.add_argument("--config", default=None, help="Archivo key=value con opciones por defecto")
    common.add_argument("--log-level", default=None, help="Nivel de log (por defecto DECWATT_LOG)")

    parser = _UsageArgumentParser(
        prog=settings.SERVICE_NAME,
        description="Estimación de la energía de decodificación HEVC",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.SERVICE_VERSION}")
    subparsers = parser.add_subparsers(dest="subcommand", required=True, parser_class=_UsageArgumentParser)

    # Bitstream
    register_extract_command(subparsers, [common])
    # Energy models
    register_estimate_command(subparsers, [common])
    # Fitting
    register_fit_command(subparsers, [common])
    # Evaluation
    register_cv_command(subparsers, [common])
    register_report_command(subparsers, [common])
    # Simlab
    register_simulate_command(subparsers, [common])
    register_integrate_command(subparsers, [common])

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    try:
        return args.handler(args)
    except AppException as e:
        logger.error(f"❌ {e.message}")
        return e.exit_code
    except (np.linalg.LinAlgError, FloatingPointError) as e:
        logger.error(f"❌ Fallo numérico: {e}")
        return EXIT_NUMERICAL
    except OSError as e:
        logger.error(f"❌ Error de E/S: {e}")
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main() or EXIT_OK)
