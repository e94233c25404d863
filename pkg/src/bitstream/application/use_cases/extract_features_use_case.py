"""
ExtractFeaturesUseCase - Cuenta features de un lote de trazas y escribe un CSV por traza.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Tuple

from src.bitstream.application.services.feature_counting_service import count_features
from src.bitstream.domain.models.feature_vector import FeatureKind
from src.bitstream.domain.repositories.feature_vector_repository import FeatureVectorRepository
from src.bitstream.domain.repositories.trace_repository import TraceRepository
from src.shared.exceptions import AppException, DuplicateOutputName

logger = logging.getLogger(__name__)


@dataclass
class ExtractFeaturesRequest:
    """Request para extraer features"""
    trace_paths: List[Path]
    kind: FeatureKind
    out_dir: Path
    fixed_point_log: bool = False


@dataclass
class ExtractFeaturesResponse:
    written: List[Path] = field(default_factory=list)
    failures: List[Tuple[Path, AppException]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


class ExtractFeaturesUseCase:
    """
    Caso de uso: extraer vectores de features de trazas.

    Un archivo ilegible o corrupto no detiene el lote; se registra como fallo
    y se sigue. Dos trazas con el mismo nombre base no se sobrescriben: la
    segunda se rechaza.
    """

    def __init__(self, trace_repository: TraceRepository, vector_repository: FeatureVectorRepository):
        self.trace_repository = trace_repository
        self.vector_repository = vector_repository

    def execute(self, request: ExtractFeaturesRequest) -> ExtractFeaturesResponse:
        response = ExtractFeaturesResponse()
        request.out_dir.mkdir(parents=True, exist_ok=True)
        kind = FeatureKind(request.kind)
        claimed: Dict[str, Path] = {}

        for path in request.trace_paths:
            try:
                name = f"{Path(path).stem}.{kind.value}.csv"
                if name in claimed:
                    raise DuplicateOutputName(name, claimed[name])
                claimed[name] = path
                trace = self.trace_repository.load(path)
            except AppException as e:
                logger.warning(f"⚠️ {path}: {e.message}")
                response.failures.append((path, e))
                continue

            vector = count_features(trace, kind, fixed_point_log=request.fixed_point_log)
            target = request.out_dir / name
            response.written.append(self.vector_repository.save(vector, target))

        logger.info(f"✅ Extracción: {len(response.written)} escritos, {len(response.failures)} fallidos")
        return response
