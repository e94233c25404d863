"""
Value Objects SyntaxEvent - Eventos de instrumentación del decodificador.

Cada variante corresponde a un punto del decodificador HEVC donde se
incrementa un contador de features. Los vectores de movimiento están en
unidades de cuarto de pel de luma (pueden ser negativos).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from src.shared.exceptions import DuplicateStreamBegin, MissingStreamBegin


class SliceType(str, Enum):
    I = "I"
    P = "P"
    B = "B"


class Plane(str, Enum):
    Y = "Y"
    CB = "Cb"
    CR = "Cr"


class SaoType(int, Enum):
    OFF = 0
    BAND_OFFSET = 1
    EDGE_OFFSET = 2


# part_mode de HEVC: 0 = 2Nx2N, {1, 2} = SMP, {4, 5, 6, 7} = AMP; 3 (NxN) no es válido aquí
SMP_PART_MODES = frozenset({1, 2})
AMP_PART_MODES = frozenset({4, 5, 6, 7})
VALID_PART_MODES = frozenset({0}) | SMP_PART_MODES | AMP_PART_MODES


@dataclass(frozen=True)
class StreamBegin:
    pass


@dataclass(frozen=True)
class Slice:
    slice_type: SliceType


@dataclass(frozen=True)
class CuIntra:
    depth: int


@dataclass(frozen=True)
class CuInter:
    """CU inter sin skip."""
    depth: int


@dataclass(frozen=True)
class CuSkip:
    depth: int


@dataclass(frozen=True)
class IntraLumaMode:
    depth: int
    mode: int
    mpm_hit: bool


@dataclass(frozen=True)
class PuInter:
    depth: int
    merge: bool
    part_mode: int


@dataclass(frozen=True)
class MotionVector:
    """Un evento por lista de referencia activa del PU."""
    depth: int
    pb_w: int
    pb_h: int
    mv_x: int
    mv_y: int


@dataclass(frozen=True)
class BiPu:
    depth: int
    pb_w: int
    pb_h: int


@dataclass(frozen=True)
class MvdLarge:
    """Solo cuando abs_mvd_greater1_flag == 1, uno por componente."""
    abs_mvd_minus2: int


@dataclass(frozen=True)
class Coeff:
    pass


@dataclass(frozen=True)
class CoeffG1:
    pass


@dataclass(frozen=True)
class CsbfNonDc:
    pass


@dataclass(frozen=True)
class CoeffRemaining:
    value: int


@dataclass(frozen=True)
class Cbf:
    depth: int
    plane: Plane
    intra: bool


@dataclass(frozen=True)
class TransformSkip:
    pass


@dataclass(frozen=True)
class BoundaryStrength:
    bs: int


@dataclass(frozen=True)
class SaoCtu:
    type_y: int
    type_cb: int
    type_cr: int


SyntaxEvent = Union[
    StreamBegin, Slice, CuIntra, CuInter, CuSkip, IntraLumaMode, PuInter,
    MotionVector, BiPu, MvdLarge, Coeff, CoeffG1, CsbfNonDc, CoeffRemaining,
    Cbf, TransformSkip, BoundaryStrength, SaoCtu,
]

EVENT_TYPES: Tuple[type, ...] = SyntaxEvent.__args__


@dataclass(frozen=True)
class SyntaxEventTrace:
    """
    Traza completa de un bit stream: un StreamBegin seguido del resto de eventos
    en el orden en que los emitió el decodificador.
    """
    stream_id: str
    events: Tuple[SyntaxEvent, ...]

    def __post_init__(self):
        if not isinstance(self.events, tuple):
            object.__setattr__(self, "events", tuple(self.events))
        if not self.events or not isinstance(self.events[0], StreamBegin):
            raise MissingStreamBegin()
        for position, event in enumerate(self.events[1:], start=2):
            if isinstance(event, StreamBegin):
                raise DuplicateStreamBegin(position)

    def __len__(self) -> int:
        return len(self.events)
