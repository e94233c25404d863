"""
Implementación de FeatureVectorRepository con CSV (pandas).

Formato: cabecera `feature,depth,count`; depth vacío para ids sin profundidad.
"""

from pathlib import Path

import pandas as pd

from src.bitstream.domain.models.feature_vector import (
    FEATURE_CATALOG,
    FeatureId,
    FeatureKind,
    FeatureVector,
)
from src.bitstream.domain.repositories.feature_vector_repository import FeatureVectorRepository
from src.shared.exceptions import DimensionMismatch, MalformedLine

COLUMNS = ["feature", "depth", "count"]


def feature_vector_to_frame(vector: FeatureVector) -> pd.DataFrame:
    ids = vector.ids
    return pd.DataFrame({
        "feature": [fid.name for fid in ids],
        "depth": pd.array([fid.depth for fid in ids], dtype="Int64"),
        "count": [vector.counts[fid] for fid in ids],
    }, columns=COLUMNS)


def _kind_for(ids) -> FeatureKind:
    id_set = set(ids)
    for kind, catalog_ids in FEATURE_CATALOG.items():
        if id_set == set(catalog_ids) and len(ids) == len(catalog_ids):
            return kind
    closest = min(FEATURE_CATALOG.values(), key=lambda c: abs(len(c) - len(ids)))
    raise DimensionMismatch(len(closest), len(ids), "ids del CSV de features")


class CsvFeatureVectorRepository(FeatureVectorRepository):

    def save(self, vector: FeatureVector, path: Path) -> Path:
        path = Path(path)
        feature_vector_to_frame(vector).to_csv(
            path, index=False, float_format="%.17g", lineterminator="\n"
        )
        return path

    def load(self, path: Path) -> FeatureVector:
        frame = pd.read_csv(path, dtype={"feature": str})
        if list(frame.columns) != COLUMNS:
            raise MalformedLine(1, f"cabecera esperada {','.join(COLUMNS)}")

        ids, counts = [], []
        rows = zip(frame["feature"], frame["depth"], frame["count"])
        for line_no, (name, depth, count) in enumerate(rows, start=2):
            if pd.isna(count) or pd.isna(name):
                raise MalformedLine(line_no, "celda vacía")
            ids.append(FeatureId(str(name), None if pd.isna(depth) else int(depth)))
            counts.append(float(count))

        kind = _kind_for(ids)
        return FeatureVector(kind, dict(zip(ids, counts)))
