"""
Value Objects FeatureId / FeatureVector - Números de features de un bit stream.

El catálogo define el orden determinista de los ids: orden de filas de la
tabla de features, profundidad ascendente. FA tiene 90 ids y FS 27.
"""

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

import numpy as np

from src.shared.exceptions import DataException, DimensionMismatch, MalformedLine, WrongKind


class FeatureKind(str, Enum):
    FA = "FA"
    FS = "FS"


@dataclass(frozen=True)
class FeatureId:
    name: str
    depth: Optional[int] = None

    @property
    def label(self) -> str:
        if self.depth is None:
            return self.name
        return f"{self.name}({self.depth})"

    def __str__(self) -> str:
        return self.label

    @classmethod
    def parse(cls, label: str) -> "FeatureId":
        match = _LABEL_PATTERN.fullmatch(label.strip())
        if match is None:
            raise ValueError(f"Etiqueta de feature inválida: '{label}'")
        depth = match.group("depth")
        return cls(match.group("name"), int(depth) if depth is not None else None)


_LABEL_PATTERN = re.compile(r"(?P<name>[A-Za-z_][A-Za-z0-9_]*)(?:\((?P<depth>\d)\))?")


def _with_depths(name: str, depths: Iterable[int]) -> List[FeatureId]:
    return [FeatureId(name, d) for d in depths]


def _build_fa_catalog() -> Tuple[FeatureId, ...]:
    ids: List[FeatureId] = [
        FeatureId("E_0"), FeatureId("Islice"), FeatureId("PBslice"), FeatureId("intraCU"),
    ]
    for name in ("pla", "dc", "hvd", "ang"):
        ids += _with_depths(name, range(1, 5))
    ids.append(FeatureId("noMPM"))
    ids += _with_depths("skip", range(0, 4))
    ids += _with_depths("merge", range(0, 4))
    ids += _with_depths("mergeSMP", range(0, 4))
    ids += _with_depths("mergeAMP", range(0, 3))
    ids += _with_depths("inter", range(0, 4))
    ids += _with_depths("interSMP", range(0, 4))
    ids += _with_depths("interAMP", range(0, 3))
    ids += _with_depths("fracpelHor", range(0, 4))
    ids += _with_depths("fracpelVer", range(0, 4))
    ids += _with_depths("chrHalfpel", range(0, 4))
    ids += [FeatureId(name) for name in ("bi", "MVD", "coeff", "coeffg1", "CSBF", "val")]
    for name in ("TrIntraY", "TrIntraC", "TrInterY", "TrInterC"):
        ids += _with_depths(name, range(1, 5))
    ids.append(FeatureId("TSF"))
    ids += [FeatureId(name) for name in ("Bs0", "Bs1", "Bs2")]
    ids += [FeatureId(name) for name in ("SAO_Y_BO", "SAO_Y_EO", "SAO_C_BO", "SAO_C_EO", "SAO_allComps")]
    return tuple(ids)


def _build_fs_catalog() -> Tuple[FeatureId, ...]:
    ids: List[FeatureId] = [
        FeatureId("E_0"), FeatureId("Islice"), FeatureId("PBslice"), FeatureId("intraCU"),
    ]
    ids += _with_depths("all", range(1, 5))
    ids += _with_depths("skip", range(0, 4))
    ids += _with_depths("interCU", range(0, 4))
    ids += [FeatureId(name) for name in ("fracpelAvg", "bi", "coeff", "val")]
    ids += _with_depths("Tr", range(1, 5))
    ids += [FeatureId(name) for name in ("Bs", "SAO_Y", "SAO_C")]
    return tuple(ids)


FEATURE_CATALOG: Dict[FeatureKind, Tuple[FeatureId, ...]] = {
    FeatureKind.FA: _build_fa_catalog(),
    FeatureKind.FS: _build_fs_catalog(),
}

_CATALOG_INDEX: Dict[FeatureKind, Dict[FeatureId, int]] = {
    kind: {feature_id: i for i, feature_id in enumerate(ids)}
    for kind, ids in FEATURE_CATALOG.items()
}

# Features cuyo número no es entero (fórmulas con log2 o divisiones)
REAL_VALUED_NAMES = frozenset({"fracpelHor", "fracpelVer", "fracpelAvg", "chrHalfpel", "bi", "MVD", "val"})


def catalog(kind: FeatureKind) -> Tuple[FeatureId, ...]:
    return FEATURE_CATALOG[FeatureKind(kind)]


@dataclass(frozen=True)
class FeatureVector:
    """
    Vector de números de features n_i de un bit stream.

    counts contiene todos los ids del catálogo (los ausentes valen 0).
    """
    model_kind: FeatureKind
    counts: Mapping[FeatureId, float]

    def __post_init__(self):
        kind = FeatureKind(self.model_kind)
        object.__setattr__(self, "model_kind", kind)
        index = _CATALOG_INDEX[kind]
        unknown = [fid for fid in self.counts if fid not in index]
        if unknown:
            raise WrongKind(kind.value, f"ids ajenos al catálogo: {', '.join(map(str, unknown))}")
        full = {fid: 0.0 for fid in FEATURE_CATALOG[kind]}
        for fid, value in self.counts.items():
            value = float(value)
            if not math.isfinite(value) or value < 0:
                raise DataException(f"Número de feature inválido para {fid}: {value}")
            full[fid] = value
        object.__setattr__(self, "counts", full)

    def __getitem__(self, feature_id) -> float:
        if isinstance(feature_id, str):
            feature_id = FeatureId.parse(feature_id)
        return self.counts[feature_id]

    @property
    def ids(self) -> Tuple[FeatureId, ...]:
        return FEATURE_CATALOG[self.model_kind]

    def as_array(self) -> np.ndarray:
        return np.array([self.counts[fid] for fid in self.ids], dtype=float)

    @classmethod
    def from_array(cls, kind: FeatureKind, values) -> "FeatureVector":
        kind = FeatureKind(kind)
        values = np.asarray(values, dtype=float)
        ids = FEATURE_CATALOG[kind]
        if values.shape != (len(ids),):
            raise DimensionMismatch(len(ids), int(values.size), f"vector {kind.value}")
        return cls(kind, dict(zip(ids, values.tolist())))

    def scaled(self, factor: float) -> "FeatureVector":
        return FeatureVector(self.model_kind, {fid: v * factor for fid, v in self.counts.items()})


@dataclass(frozen=True)
class PartialFeatureVector:
    """Entradas FS derivables a partir de un vector FA."""
    counts: Mapping[FeatureId, float]
    non_derivable: FrozenSet[FeatureId] = field(default_factory=frozenset)
    model_kind: FeatureKind = FeatureKind.FS

    def __getitem__(self, feature_id) -> float:
        if isinstance(feature_id, str):
            feature_id = FeatureId.parse(feature_id)
        return self.counts[feature_id]


def parse_feature_label(label: str, line_no: int = 0) -> FeatureId:
    try:
        return FeatureId.parse(label)
    except ValueError as e:
        raise MalformedLine(line_no, str(e)) from e
