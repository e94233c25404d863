"""
Implementación de TraceRepository sobre archivos de texto.
"""

import logging
from pathlib import Path

from src.bitstream.domain.models.syntax_event import SyntaxEventTrace
from src.bitstream.domain.repositories.trace_repository import TraceRepository
from src.bitstream.infrastructure.helpers.trace_codec import parse_trace, serialize_trace
from src.shared.exceptions import DataException

logger = logging.getLogger(__name__)


class FileTraceRepository(TraceRepository):

    def load(self, path: Path) -> SyntaxEventTrace:
        path = Path(path)
        try:
            raw = path.read_bytes()
        except OSError as e:
            raise DataException(f"No se puede leer la traza {path}: {e.strerror or e}") from e
        trace = parse_trace(raw, stream_id=path.stem)
        logger.debug(f"Traza {path.name}: {len(trace)} eventos")
        return trace

    def save(self, trace: SyntaxEventTrace, path: Path) -> Path:
        path = Path(path)
        path.write_text(serialize_trace(trace), encoding="utf-8")
        return path
