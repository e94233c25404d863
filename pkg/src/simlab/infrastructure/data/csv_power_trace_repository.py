"""
Implementación de PowerTraceRepository con CSV (pandas).

Formato: cabecera `time_s,power_w`, una muestra por fila, rejilla uniforme.
"""

from pathlib import Path

import numpy as np
import pandas as pd

from src.shared.exceptions import MalformedLine, MismatchedTraces
from src.simlab.domain.models.power_trace import PowerTrace
from src.simlab.domain.repositories.power_trace_repository import PowerTraceRepository

COLUMNS = ["time_s", "power_w"]


def power_trace_to_frame(trace: PowerTrace) -> pd.DataFrame:
    times = np.arange(len(trace.samples)) * trace.sample_period
    return pd.DataFrame({"time_s": times, "power_w": trace.as_array()}, columns=COLUMNS)


class CsvPowerTraceRepository(PowerTraceRepository):

    def load(self, path: Path) -> PowerTrace:
        frame = pd.read_csv(path)
        if list(frame.columns) != COLUMNS:
            raise MalformedLine(1, f"cabecera esperada {','.join(COLUMNS)}")
        if frame.isna().any().any():
            raise MalformedLine(int(frame.isna().any(axis=1).to_numpy().argmax()) + 2, "celda vacía")

        times = frame["time_s"].to_numpy(dtype=float)
        if times.size < 2:
            raise MismatchedTraces(f"{Path(path).name}: menos de 2 muestras")
        steps = np.diff(times)
        period = float(steps[0])
        if period <= 0 or not np.allclose(steps, period, rtol=1e-6, atol=0.0):
            raise MismatchedTraces(f"{Path(path).name}: rejilla temporal no uniforme")
        return PowerTrace(sample_period=period, samples=tuple(frame["power_w"].to_numpy(dtype=float)))

    def save(self, trace: PowerTrace, path: Path) -> Path:
        path = Path(path)
        power_trace_to_frame(trace).to_csv(path, index=False, float_format="%.17g", lineterminator="\n")
        return path
