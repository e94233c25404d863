"""
TraceGenerationService - Trazas sintéticas deterministas a partir de una semilla.

Sirve como fuente de datos de prueba (oráculo de conteo, round-trip del
codec) y como base del generador de datasets del laboratorio simulado.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np

from src.bitstream.domain.models.syntax_event import (
    AMP_PART_MODES,
    BiPu,
    BoundaryStrength,
    Cbf,
    Coeff,
    CoeffG1,
    CoeffRemaining,
    CsbfNonDc,
    CuInter,
    CuIntra,
    CuSkip,
    IntraLumaMode,
    MotionVector,
    MvdLarge,
    Plane,
    PuInter,
    SaoCtu,
    Slice,
    SliceType,
    StreamBegin,
    SyntaxEvent,
    SyntaxEventTrace,
    TransformSkip,
)

logger = logging.getLogger(__name__)

CTU_SIZE = 64
MV_RANGE = 64

_PROB_INTRA_IN_INTER_SLICE = 0.15
_PROB_SKIP = 0.3
_PROB_MERGE = 0.4
_PROB_BI = 0.4
_PROB_LARGE_MVD = 0.35
_PROB_TRANSFORM_SKIP = 0.05


def pu_sizes(depth: int, part_mode: int) -> List[tuple]:
    """Tamaños (ancho, alto) de los PUs de un CU de profundidad `depth`."""
    s = CTU_SIZE >> depth
    q = s // 4
    layouts = {
        0: [(s, s)],
        1: [(s, s // 2), (s, s // 2)],
        2: [(s // 2, s), (s // 2, s)],
        4: [(s, q), (s, s - q)],
        5: [(s, s - q), (s, q)],
        6: [(q, s), (s - q, s)],
        7: [(s - q, s), (q, s)],
    }
    return layouts[part_mode]


class TraceSynthesizer:
    """
    Emite eventos de instrumentación plausibles CTU a CTU.

    Todas las decisiones salen del generador `rng`, así que la secuencia de
    eventos queda fijada por la semilla.
    """

    def __init__(self, rng: np.random.Generator):
        self.rng = rng

    def _chance(self, p: float) -> bool:
        return bool(self.rng.random() < p)

    def draw_int(self, lo: int, hi_inclusive: int) -> int:
        return int(self.rng.integers(lo, hi_inclusive + 1))

    def frame_events(self, slice_type: SliceType, n_ctus: int) -> List[SyntaxEvent]:
        events: List[SyntaxEvent] = [Slice(slice_type)]
        for _ in range(n_ctus):
            events += self.ctu_events(slice_type)
        return events

    def ctu_events(self, slice_type: SliceType) -> List[SyntaxEvent]:
        events: List[SyntaxEvent] = []
        for _ in range(self.draw_int(1, 4)):
            if slice_type is SliceType.I or self._chance(_PROB_INTRA_IN_INTER_SLICE):
                events += self._intra_cu()
            else:
                events += self._inter_cu(slice_type)
        for _ in range(self.draw_int(0, 3)):
            events.append(BoundaryStrength(self.draw_int(0, 2)))
        events.append(SaoCtu(self.draw_int(0, 2), self.draw_int(0, 2), self.draw_int(0, 2)))
        return events

    def _intra_cu(self) -> List[SyntaxEvent]:
        depth = self.draw_int(0, 4)
        events: List[SyntaxEvent] = [CuIntra(depth)]
        if depth == 3 and self._chance(0.3):
            mode_depths = [4] * 4
        else:
            mode_depths = [max(depth, 1)]
        for mode_depth in mode_depths:
            events.append(IntraLumaMode(mode_depth, self.draw_int(0, 34), self._chance(0.6)))
        events += self._residual(intra=True, depth=min(depth, 3))
        return events

    def _inter_cu(self, slice_type: SliceType) -> List[SyntaxEvent]:
        depth = self.draw_int(0, 3)
        if self._chance(_PROB_SKIP):
            side = CTU_SIZE >> depth
            return [CuSkip(depth)] + self._motion(slice_type, depth, side, side, merge=True)

        events: List[SyntaxEvent] = [CuInter(depth)]
        modes = [0, 1, 2] + (sorted(AMP_PART_MODES) if depth <= 2 else [])
        part_mode = int(self.rng.choice(modes))
        for width, height in pu_sizes(depth, part_mode):
            merge = self._chance(_PROB_MERGE)
            events.append(PuInter(depth, merge, part_mode))
            events += self._motion(slice_type, depth, width, height, merge)
        events += self._residual(intra=False, depth=depth)
        return events

    def _motion(self, slice_type: SliceType, depth: int, width: int, height: int, merge: bool) -> List[SyntaxEvent]:
        bi = slice_type is SliceType.B and self._chance(_PROB_BI)
        events: List[SyntaxEvent] = []
        for _ in range(2 if bi else 1):
            mv_x = self.draw_int(-MV_RANGE, MV_RANGE)
            mv_y = self.draw_int(-MV_RANGE, MV_RANGE)
            events.append(MotionVector(depth, width, height, mv_x, mv_y))
            if not merge:
                for _component in range(2):
                    if self._chance(_PROB_LARGE_MVD):
                        events.append(MvdLarge(self.draw_int(0, 200)))
        if bi:
            events.append(BiPu(depth, width, height))
        return events

    def _residual(self, intra: bool, depth: int) -> List[SyntaxEvent]:
        events: List[SyntaxEvent] = []
        tu_depth = min(4, max(1, depth + self.draw_int(0, 1)))
        for plane in (Plane.Y, Plane.CB, Plane.CR):
            if not self._chance(0.7 if plane is Plane.Y else 0.4):
                continue
            events.append(Cbf(tu_depth, plane, intra))
            n_coeffs = self.draw_int(1, 8)
            events += [Coeff() for _ in range(n_coeffs)]
            events += [CoeffG1() for _ in range(self.draw_int(0, n_coeffs))]
            if self._chance(0.3):
                events.append(CsbfNonDc())
            events += [CoeffRemaining(self.draw_int(0, 300)) for _ in range(self.draw_int(0, 2))]
            if self._chance(_PROB_TRANSFORM_SKIP):
                events.append(TransformSkip())
        return events


_SLICE_TYPES: Sequence[SliceType] = (SliceType.I, SliceType.P, SliceType.B)
_SLICE_WEIGHTS = (0.2, 0.4, 0.4)


def generate_random_trace(seed: int, size_hint: int, stream_id: Optional[str] = None) -> SyntaxEventTrace:
    """
    Genera una traza válida con aproximadamente `size_hint` eventos.

    Args:
        seed: Semilla; misma semilla => misma traza
        size_hint: Número aproximado de eventos (>= 1)
        stream_id: Identificador; por defecto `random_<seed>`

    Returns:
        SyntaxEventTrace
    """
    if size_hint < 1:
        raise ValueError("size_hint debe ser >= 1")

    rng = np.random.default_rng(seed)
    synthesizer = TraceSynthesizer(rng)
    events: List[SyntaxEvent] = [StreamBegin()]
    slice_type = SliceType.I
    while len(events) <= size_hint:
        events.append(Slice(slice_type))
        for _ in range(synthesizer.draw_int(1, 3)):
            events += synthesizer.ctu_events(slice_type)
        slice_type = _SLICE_TYPES[int(rng.choice(len(_SLICE_TYPES), p=_SLICE_WEIGHTS))]

    return SyntaxEventTrace(stream_id=stream_id or f"random_{seed}", events=tuple(events))
