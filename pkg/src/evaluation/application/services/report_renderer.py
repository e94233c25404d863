"""
ReportRenderer - Tabla sistemas × modelos de errores medios en porcentaje.

La columna "∅" (media por sistema) aparece con más de un modelo y la fila
"∅" (media por modelo) con más de un sistema. Las medias se calculan sobre
las celdas presentes.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from src.evaluation.domain.models.cv_report import CvReport

AVERAGE_LABEL = "∅"
MISSING_CELL = "-"
CSV_COLUMNS = ["system", "model", "mean_abs_error_percent"]


def format_percent(value: float) -> str:
    return f"{100 * value:.2f}%"


@dataclass(frozen=True)
class ReportDocument:
    systems: Tuple[str, ...]
    models: Tuple[str, ...]
    cells: Dict[Tuple[str, str], float]
    csv_text: str
    text: str

    def cell(self, system: str, model: str) -> Optional[float]:
        return self.cells.get((system, model))


def _ordered_unique(values: Sequence[str]) -> Tuple[str, ...]:
    return tuple(dict.fromkeys(values))


def _mean(values: List[float]) -> Optional[float]:
    return float(np.mean(values)) if values else None


def render_report(reports: Sequence[CvReport]) -> ReportDocument:
    """Renderiza la tabla en CSV y en texto. Sin informes, la tabla queda vacía."""
    systems = _ordered_unique([r.system for r in reports])
    models = _ordered_unique([r.model_id for r in reports])
    # Un informe posterior del mismo (sistema, modelo) reemplaza al anterior
    cells = {(r.system, r.model_id): r.mean_abs_error for r in reports}

    row_average = len(models) > 1
    column_average = len(systems) > 1

    def system_mean(system: str) -> Optional[float]:
        return _mean([cells[(system, m)] for m in models if (system, m) in cells])

    def model_mean(model: str) -> Optional[float]:
        return _mean([cells[(s, model)] for s in systems if (s, model) in cells])

    overall = _mean(list(cells.values()))

    # CSV
    records = []
    for system in systems:
        for model in models:
            if (system, model) in cells:
                records.append((system, model, f"{100 * cells[(system, model)]:.2f}"))
        if row_average:
            records.append((system, AVERAGE_LABEL, f"{100 * system_mean(system):.2f}"))
    if column_average:
        for model in models:
            records.append((AVERAGE_LABEL, model, f"{100 * model_mean(model):.2f}"))
        if row_average:
            records.append((AVERAGE_LABEL, AVERAGE_LABEL, f"{100 * overall:.2f}"))
    csv_text = pd.DataFrame.from_records(records, columns=CSV_COLUMNS).to_csv(
        index=False, lineterminator="\n"
    )

    # Texto
    header = ["system", *models] + ([AVERAGE_LABEL] if row_average else [])
    lines = [header]
    for system in systems:
        line = [system]
        for model in models:
            value = cells.get((system, model))
            line.append(format_percent(value) if value is not None else MISSING_CELL)
        if row_average:
            line.append(format_percent(system_mean(system)))
        lines.append(line)
    if column_average:
        line = [AVERAGE_LABEL] + [format_percent(model_mean(m)) for m in models]
        if row_average:
            line.append(format_percent(overall))
        lines.append(line)

    widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
    text = "".join(
        " | ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip() + "\n"
        for line in lines
    )

    return ReportDocument(systems=systems, models=models, cells=cells, csv_text=csv_text, text=text)
