"""
Implementación de DatasetRepository con CSV (pandas).

Columnas:
    stream_id, sequence, config, qp, frame_count, S, N, f, b, b_pixel, alpha,
    t_dec, pe_if, pe_l1dm, n_ra, n_wa, energy_J
seguidas opcionalmente de una columna por feature: `FA:<id>` / `FS:<id>`.
Una celda vacía es un valor opcional ausente.
"""

import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional

import pandas as pd

from src.bitstream.domain.models.feature_vector import FEATURE_CATALOG, FeatureKind, FeatureVector
from src.energy_models.domain.models.bitstream_meta import BitstreamMeta, MemCounts, PeCounts
from src.fitting.domain.models.dataset import Dataset, DatasetRow, GroupKey
from src.fitting.domain.repositories.dataset_repository import DatasetRepository
from src.shared.exceptions import MalformedLine
from src.shared.utils.hashing import compute_sha256
from src.shared.utils.json_encoder import safe_float, safe_int

logger = logging.getLogger(__name__)

BASE_COLUMNS = [
    "stream_id", "sequence", "config", "qp", "frame_count", "S", "N", "f", "b",
    "b_pixel", "alpha", "t_dec", "pe_if", "pe_l1dm", "n_ra", "n_wa", "energy_J",
]
REQUIRED_COLUMNS = ["stream_id", "qp", "S", "N", "f", "b", "b_pixel", "alpha"]
INTEGER_COLUMNS = ["qp", "frame_count", "S", "N"]


def feature_column(kind: FeatureKind, label: str) -> str:
    return f"{FeatureKind(kind).value}:{label}"


def _feature_columns(kind: FeatureKind) -> List[str]:
    return [feature_column(kind, fid.label) for fid in FEATURE_CATALOG[kind]]


def _optional_pair(record: Dict, first: str, second: str):
    a, b = safe_float(record.get(first)), safe_float(record.get(second))
    if a is None or b is None:
        return None
    return a, b


def _row_from_record(record: Dict, line_no: int, kinds: List[FeatureKind]) -> DatasetRow:
    stream_id = record.get("stream_id")
    if stream_id is None or (isinstance(stream_id, float) and pd.isna(stream_id)) or str(stream_id) == "":
        raise MalformedLine(line_no, "stream_id vacío")

    pe = _optional_pair(record, "pe_if", "pe_l1dm")
    mem = _optional_pair(record, "n_ra", "n_wa")
    try:
        meta = BitstreamMeta(
            frame_size=safe_int(record["S"]),
            num_frames=safe_int(record["N"]),
            frame_rate=safe_float(record["f"]),
            qp=safe_int(record["qp"]),
            bitrate=safe_float(record["b"]),
            bits_per_pixel=safe_float(record["b_pixel"]),
            intra_fraction=safe_float(record["alpha"]),
            decode_time=safe_float(record.get("t_dec")),
            pe_counts=PeCounts(*pe) if pe else None,
            mem_counts=MemCounts(*mem) if mem else None,
        )
    except (TypeError, ValueError) as e:
        raise MalformedLine(line_no, f"variables incompletas o no numéricas ({e})") from e

    sequence, config = record.get("sequence"), record.get("config")
    group_key = None
    if isinstance(sequence, str) and isinstance(config, str) and sequence and config:
        group_key = GroupKey(sequence=sequence, config=config, qp=meta.qp)

    features = {}
    for kind in kinds:
        values = [safe_float(record.get(column)) for column in _feature_columns(kind)]
        if all(v is not None for v in values):
            features[kind] = FeatureVector.from_array(kind, values)

    return DatasetRow(
        stream_id=str(stream_id),
        meta=meta,
        energy=safe_float(record.get("energy_J")),
        group_key=group_key,
        frame_count=safe_int(record.get("frame_count")),
        features=features,
    )


def dataset_to_frame(dataset: Dataset, feature_kinds: Iterable[FeatureKind] = ()) -> pd.DataFrame:
    kinds = [FeatureKind(k) for k in feature_kinds]
    records = []
    for row in dataset.rows:
        meta = row.meta
        record = {
            "stream_id": row.stream_id,
            "sequence": row.group_key.sequence if row.group_key else None,
            "config": row.group_key.config if row.group_key else None,
            "qp": meta.qp,
            "frame_count": row.frame_count,
            "S": meta.frame_size,
            "N": meta.num_frames,
            "f": meta.frame_rate,
            "b": meta.bitrate,
            "b_pixel": meta.bits_per_pixel,
            "alpha": meta.intra_fraction,
            "t_dec": meta.decode_time,
            "pe_if": meta.pe_counts.instruction_fetches if meta.pe_counts else None,
            "pe_l1dm": meta.pe_counts.l1d_misses if meta.pe_counts else None,
            "n_ra": meta.mem_counts.ram_reads if meta.mem_counts else None,
            "n_wa": meta.mem_counts.ram_writes if meta.mem_counts else None,
            "energy_J": row.energy,
        }
        for kind in kinds:
            vector = row.feature_vector(kind)
            for fid, column in zip(FEATURE_CATALOG[kind], _feature_columns(kind)):
                record[column] = vector.counts[fid] if vector is not None else None
        records.append(record)

    columns = BASE_COLUMNS + [c for kind in kinds for c in _feature_columns(kind)]
    frame = pd.DataFrame.from_records(records, columns=columns)
    for column in INTEGER_COLUMNS:
        frame[column] = frame[column].astype("Int64")
    return frame


class CsvDatasetRepository(DatasetRepository):

    def load(self, path: Path) -> Dataset:
        path = Path(path)
        frame = pd.read_csv(path, dtype={"stream_id": str, "sequence": str, "config": str})
        missing = [c for c in REQUIRED_COLUMNS if c not in frame.columns]
        if missing:
            raise MalformedLine(1, f"faltan columnas: {', '.join(missing)}")

        kinds = [
            kind for kind in FeatureKind
            if all(column in frame.columns for column in _feature_columns(kind))
        ]
        records = frame.to_dict("records")
        rows = [_row_from_record(record, line_no, kinds) for line_no, record in enumerate(records, start=2)]
        logger.info(f"📊 Dataset {path.name}: {len(rows)} filas, features {[k.value for k in kinds]}")
        return Dataset(rows=tuple(rows), name=path.stem, digest=compute_sha256(path))

    def save(self, dataset: Dataset, path: Path, feature_kinds: Iterable[FeatureKind] = ()) -> Path:
        path = Path(path)
        dataset_to_frame(dataset, feature_kinds).to_csv(
            path, index=False, float_format="%.17g", lineterminator="\n"
        )
        return path
