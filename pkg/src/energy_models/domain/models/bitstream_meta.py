"""
Value Object BitstreamMeta - Variables de alto nivel de un bit stream.
"""

import math
from dataclasses import dataclass, fields
from typing import Optional, Set

from src.shared.exceptions import DataException


@dataclass(frozen=True)
class PeCounts:
    """Eventos del procesador (contados fuera de este paquete)."""
    instruction_fetches: float
    l1d_misses: float


@dataclass(frozen=True)
class MemCounts:
    """Accesos a RAM."""
    ram_reads: float
    ram_writes: float


# Nombres de variable usados en los requisitos de cada modelo y en el CSV
ALWAYS_PRESENT = ("S", "N", "f", "qp", "b", "b_pixel", "alpha")


@dataclass(frozen=True)
class BitstreamMeta:
    """
    Variables de alto nivel de un bit stream.

    Attributes:
        frame_size: S, píxeles por frame
        num_frames: N
        frame_rate: f en Hz
        qp: parámetro de cuantización
        bitrate: b en bit/s
        bits_per_pixel: bits totales / (S·N)
        intra_fraction: α = frames intra / N
        decode_time: t_dec en segundos (requiere ejecución)
        pe_counts: eventos del procesador (requiere ejecución)
        mem_counts: accesos a RAM (requiere ejecución)
    """
    frame_size: int
    num_frames: int
    frame_rate: float
    qp: int
    bitrate: float
    bits_per_pixel: float
    intra_fraction: float
    decode_time: Optional[float] = None
    pe_counts: Optional[PeCounts] = None
    mem_counts: Optional[MemCounts] = None

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, (PeCounts, MemCounts)):
                values = [getattr(value, inner.name) for inner in fields(value)]
            else:
                values = [value]
            for item in values:
                if item is not None and not math.isfinite(item):
                    raise DataException(f"Valor no finito en {f.name}: {item}")
        if self.frame_size < 1 or self.num_frames < 1:
            raise DataException(f"S y N deben ser >= 1 (S={self.frame_size}, N={self.num_frames})")
        if not 0.0 <= self.intra_fraction <= 1.0:
            raise DataException(f"α debe estar en [0, 1] (valor {self.intra_fraction})")

    @property
    def total_bits(self) -> float:
        return self.bits_per_pixel * self.frame_size * self.num_frames

    @property
    def intra_frames(self) -> int:
        return int(round(self.intra_fraction * self.num_frames))

    def available_variables(self) -> Set[str]:
        available = set(ALWAYS_PRESENT)
        if self.decode_time is not None:
            available.add("t_dec")
        if self.pe_counts is not None:
            available |= {"pe_if", "pe_l1dm"}
        if self.mem_counts is not None:
            available |= {"n_ra", "n_wa"}
        return available
