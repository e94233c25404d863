"""
FrameLevelService - Energías por frame a partir de grupos de 1..n frames.

ΔE_n = E(n) − E(n−1). Se diferencian las variables extensivas (tiempo,
bits, eventos, features, frames intra) y se conservan las intensivas
(S, f, QP). La fila de n = 1 se conserva tal cual.
"""

import logging
from collections import OrderedDict
from dataclasses import astuple
from typing import Dict, List, Optional, Tuple

from src.bitstream.domain.models.feature_vector import FeatureVector
from src.energy_models.domain.models.bitstream_meta import BitstreamMeta, MemCounts, PeCounts
from src.fitting.domain.models.dataset import Dataset, DatasetRow, GroupKey
from src.shared.exceptions import MissingFrameCount, NonMonotoneGroup, NonPositiveEnergy

logger = logging.getLogger(__name__)


def _group_rows(dataset: Dataset) -> "OrderedDict[GroupKey, List[DatasetRow]]":
    groups: "OrderedDict[GroupKey, List[DatasetRow]]" = OrderedDict()
    for row in dataset.rows:
        if row.group_key is None or row.frame_count is None:
            raise MissingFrameCount(row.stream_id, "fila sin grupo o sin frame_count")
        groups.setdefault(row.group_key, []).append(row)

    for key, rows in groups.items():
        rows.sort(key=lambda r: r.frame_count)
        counts = [r.frame_count for r in rows]
        for previous, current in zip(counts, counts[1:]):
            if current == previous:
                raise NonMonotoneGroup(str(key), current)
        if counts != list(range(1, len(counts) + 1)):
            raise MissingFrameCount(str(key), f"frame_counts {counts} no son 1..{len(counts)}")
    return groups


def _delta_pair(current, previous, cls):
    if current is None or previous is None:
        return None
    return cls(*(a - b for a, b in zip(astuple(current), astuple(previous))))


def _delta_meta(current: BitstreamMeta, previous: BitstreamMeta) -> Optional[BitstreamMeta]:
    delta_bits = current.total_bits - previous.total_bits
    delta_intra = current.intra_frames - previous.intra_frames
    delta_time = None
    if current.decode_time is not None and previous.decode_time is not None:
        delta_time = current.decode_time - previous.decode_time
    pe = _delta_pair(current.pe_counts, previous.pe_counts, PeCounts)
    mem = _delta_pair(current.mem_counts, previous.mem_counts, MemCounts)

    extensive = [delta_bits, delta_intra]
    extensive += [delta_time] if delta_time is not None else []
    extensive += [pe.instruction_fetches, pe.l1d_misses] if pe else []
    extensive += [mem.ram_reads, mem.ram_writes] if mem else []
    if min(extensive) < 0 or delta_intra > 1:
        return None

    return BitstreamMeta(
        frame_size=current.frame_size,
        num_frames=1,
        frame_rate=current.frame_rate,
        qp=current.qp,
        bitrate=delta_bits * current.frame_rate,
        bits_per_pixel=delta_bits / current.frame_size,
        intra_fraction=float(delta_intra),
        decode_time=delta_time,
        pe_counts=pe,
        mem_counts=mem,
    )


def _delta_features(current: DatasetRow, previous: DatasetRow) -> Optional[Dict]:
    features = {}
    for kind, vector in current.features.items():
        before = previous.feature_vector(kind)
        if before is None:
            continue
        delta = vector.as_array() - before.as_array()
        if (delta < 0).any():
            return None
        features[kind] = FeatureVector.from_array(kind, delta)
    return features


def difference_frames(dataset: Dataset) -> Tuple[Dataset, int]:
    """
    Dataset por frame y número de filas descartadas.

    Raises:
        MissingFrameCount: Grupo sin frame_count consecutivos desde 1
        NonMonotoneGroup: frame_count repetido dentro de un grupo
    """
    groups = _group_rows(dataset)
    derived: List[DatasetRow] = []
    negative_counts = 0
    non_positive_energy = 0

    for key, rows in groups.items():
        derived.append(rows[0])
        for previous, current in zip(rows, rows[1:]):
            if current.energy is None or previous.energy is None:
                raise NonPositiveEnergy(float("nan"), current.stream_id)

            meta = _delta_meta(current.meta, previous.meta)
            features = _delta_features(current, previous)
            if meta is None or features is None:
                negative_counts += 1
                logger.warning(f"⚠️ {current.stream_id}: deltas negativos en variables o features, fila descartada")
                continue

            delta_energy = current.energy - previous.energy
            if not delta_energy > 0:
                non_positive_energy += 1
                logger.warning(f"⚠️ {current.stream_id}: ΔE={delta_energy:.6g} J <= 0, fila descartada")
                continue

            derived.append(DatasetRow(
                stream_id=current.stream_id,
                meta=meta,
                energy=delta_energy,
                group_key=key,
                frame_count=current.frame_count,
                features=features,
            ))

    dropped = negative_counts + non_positive_energy
    if dropped:
        logger.warning(
            f"⚠️ Diferenciación por frame: {dropped} filas descartadas "
            f"({non_positive_energy} con ΔE <= 0, {negative_counts} con deltas negativos)"
        )
    logger.info(f"🎞️ {len(derived)} filas por frame de {len(groups)} grupos")
    return dataset.with_rows(derived), dropped


def frame_level_energies(dataset: Dataset) -> Dataset:
    """Dataset por frame (ver difference_frames)."""
    return difference_frames(dataset)[0]
