"""
ExtractController - Adaptador entre el subcomando `extract` y su caso de uso.
"""

import logging
import sys
from pathlib import Path

from src.bitstream.application.use_cases.extract_features_use_case import ExtractFeaturesRequest
from src.shared.exceptions import EXIT_DATA, EXIT_OK, DataException
from src.shared.run_config import RunConfig

logger = logging.getLogger(__name__)


class ExtractController:

    def __init__(self, extract_use_case):
        self.extract_use_case = extract_use_case

    def extract(self, config: RunConfig) -> int:
        """
        Extrae un CSV de features por traza.

        Returns:
            int: 0 si todas las trazas se procesaron, 2 si alguna falló
        """
        try:
            logger.info(f"🔍 Controller: extrayendo {config.kind} de {len(config.inputs)} trazas")
            request = ExtractFeaturesRequest(
                trace_paths=[Path(p) for p in config.inputs],
                kind=config.kind,
                out_dir=Path(config.out or "."),
                fixed_point_log=config.fixed_point_log,
            )
            response = self.extract_use_case.execute(request)
        except OSError as e:
            raise DataException(f"Error de E/S: {e}") from e

        for path in response.written:
            print(path)
        if response.ok:
            return EXIT_OK

        print(f"{len(response.failures)} trazas con errores:", file=sys.stderr)
        for path, error in response.failures:
            print(f"  {path}: {error.message}", file=sys.stderr)
        return EXIT_DATA
