"""
Entidades Dataset / DatasetRow / FitResult.
"""

from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.bitstream.domain.models.feature_vector import FeatureKind, FeatureVector
from src.energy_models.domain.models.bitstream_meta import BitstreamMeta
from src.energy_models.domain.models.trained_model import TrainedModel
from src.shared.exceptions import DataException, NonPositiveEnergy


@dataclass(frozen=True)
class GroupKey:
    """Bit streams que solo difieren en el número de frames codificados."""
    sequence: str
    config: str
    qp: int

    def __str__(self) -> str:
        return f"{self.sequence}/{self.config}/qp{self.qp}"


@dataclass(frozen=True)
class DatasetRow:
    stream_id: str
    meta: BitstreamMeta
    energy: Optional[float] = None
    group_key: Optional[GroupKey] = None
    frame_count: Optional[int] = None
    features: Mapping[FeatureKind, FeatureVector] = field(default_factory=dict)

    def feature_vector(self, kind: FeatureKind) -> Optional[FeatureVector]:
        return self.features.get(FeatureKind(kind))


@dataclass(frozen=True)
class Dataset:
    """
    Conjunto de bit streams con sus variables y energía medida.

    stream_id es único dentro del dataset.
    """
    rows: Tuple[DatasetRow, ...]
    name: str = "dataset"
    digest: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        seen = set()
        for row in self.rows:
            if row.stream_id in seen:
                raise DataException(f"stream_id duplicado: {row.stream_id}")
            seen.add(row.stream_id)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    @property
    def stream_ids(self) -> List[str]:
        return [row.stream_id for row in self.rows]

    def subset(self, indices: Iterable[int]) -> "Dataset":
        return Dataset(rows=tuple(self.rows[i] for i in indices), name=self.name, digest=self.digest)

    def with_rows(self, rows: Sequence[DatasetRow]) -> "Dataset":
        return replace(self, rows=tuple(rows))

    def energies(self) -> np.ndarray:
        """Energías medidas; todas deben ser > 0 (el error relativo no existe si no)."""
        values = []
        for row in self.rows:
            if row.energy is None or not row.energy > 0:
                raise NonPositiveEnergy(row.energy if row.energy is not None else float("nan"), row.stream_id)
            values.append(row.energy)
        return np.array(values, dtype=float)


@dataclass(frozen=True)
class FitResult:
    model: TrainedModel
    objective_value: float
    iterations: int
    converged: bool

    def summary(self) -> Dict:
        return {
            "objective_value": self.objective_value,
            "iterations": self.iterations,
            "converged": self.converged,
        }
