"""
Entidad CvReport - Resultado de la validación cruzada de un modelo.
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple


@dataclass(frozen=True)
class CvReport:
    """
    Errores relativos por fila y su media absoluta.

    Attributes:
        model_id: Modelo evaluado
        system: Sistema de decodificación (etiqueta de la tabla de resultados)
        per_fold_errors: ε de cada fila retenida, agrupados por fold (orden del dataset)
        fold_assignment: stream_id -> fold
        mean_abs_error: (1/M)·Σ|ε|
        seed: Semilla de la permutación
        folds: Número de folds
        frame_level: True si las energías se diferenciaron por frame
        dropped_rows: Filas descartadas por la diferenciación
    """
    model_id: str
    system: str
    per_fold_errors: Tuple[Tuple[float, ...], ...]
    fold_assignment: Dict[str, int]
    mean_abs_error: float
    seed: int
    folds: int
    frame_level: bool = False
    dropped_rows: int = 0
    row_errors: Dict[str, float] = field(default_factory=dict)

    @property
    def held_out_rows(self) -> int:
        return sum(len(errors) for errors in self.per_fold_errors)


def cv_report_filename(system: str, model_id: str) -> str:
    return f"{system}__{model_id}.cv.json"
