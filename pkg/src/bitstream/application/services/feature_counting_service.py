"""
FeatureCountingService - Conteo de features FA / FS sobre una traza.

Una sola pasada sobre los eventos; cada evento incrementa los contadores
que le corresponden según las condiciones de la tabla de features.
"""

import logging
import math
from collections import defaultdict
from typing import Callable, DefaultDict, Dict

from src.bitstream.domain.models.feature_vector import (
    FEATURE_CATALOG,
    FeatureId,
    FeatureKind,
    FeatureVector,
    PartialFeatureVector,
)
from src.bitstream.domain.models.syntax_event import (
    AMP_PART_MODES,
    SMP_PART_MODES,
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
    SaoType,
    Slice,
    SliceType,
    StreamBegin,
    SyntaxEventTrace,
    TransformSkip,
)
from src.shared.exceptions import WrongKind

logger = logging.getLogger(__name__)

# Corrección de mantisa de dos puntos: log2(1.5) redondeado
FIXED_POINT_HALF_STEP = 0.585

MAX_TR_DEPTH = 4


def exact_log2(value: int) -> float:
    return math.log2(value + 2)


def fixed_point_log2(value: int) -> float:
    """Posición del bit más alto de (v+2), más 0.585 si el bit siguiente también está activo."""
    x = int(value) + 2
    p = x.bit_length() - 1
    if (x >> (p - 1)) & 1:
        return p + FIXED_POINT_HALF_STEP
    return float(p)


def intra_mode_class(mode: int) -> str:
    """Clase del modo intra de luma: planar, DC, horizontal/vertical/diagonal o angular."""
    if mode == 0:
        return "pla"
    if mode == 1:
        return "dc"
    if mode in (2, 10, 26, 34):
        return "hvd"
    return "ang"


def inter_pu_class(merge: bool, part_mode: int) -> str:
    prefix = "merge" if merge else "inter"
    if part_mode in SMP_PART_MODES:
        return prefix + "SMP"
    if part_mode in AMP_PART_MODES:
        return prefix + "AMP"
    return prefix


def chroma_tr_depth(depth: int, plane: Plane) -> int:
    """Los bloques de croma son más pequeños: una profundidad más (máximo 4)."""
    if plane is Plane.Y:
        return depth
    return min(depth + 1, MAX_TR_DEPTH)


class FeatureCounter:
    """
    Acumulador de una pasada para un tipo de vector (FA o FS).
    """

    def __init__(self, kind: FeatureKind, fixed_point_log: bool = False):
        self.kind = FeatureKind(kind)
        self.log2 = fixed_point_log2 if fixed_point_log else exact_log2
        self.counts: DefaultDict[FeatureId, float] = defaultdict(float)
        self._handlers: Dict[type, Callable] = {
            StreamBegin: self._on_stream_begin,
            Slice: self._on_slice,
            CuIntra: self._on_cu_intra,
            CuInter: self._on_cu_inter,
            CuSkip: self._on_cu_skip,
            IntraLumaMode: self._on_intra_luma_mode,
            PuInter: self._on_pu_inter,
            MotionVector: self._on_motion_vector,
            BiPu: self._on_bi_pu,
            MvdLarge: self._on_mvd,
            Coeff: self._on_coeff,
            CoeffG1: self._on_coeff_g1,
            CsbfNonDc: self._on_csbf,
            CoeffRemaining: self._on_coeff_remaining,
            Cbf: self._on_cbf,
            TransformSkip: self._on_transform_skip,
            BoundaryStrength: self._on_boundary_strength,
            SaoCtu: self._on_sao,
        }

    @property
    def is_fa(self) -> bool:
        return self.kind is FeatureKind.FA

    def _add(self, name: str, amount: float = 1.0, depth: int = None) -> None:
        self.counts[FeatureId(name, depth)] += amount

    def feed(self, event) -> None:
        self._handlers[type(event)](event)

    def result(self) -> FeatureVector:
        return FeatureVector(self.kind, dict(self.counts))

    # --- Estructura ---

    def _on_stream_begin(self, event: StreamBegin) -> None:
        self.counts[FeatureId("E_0")] = 1.0

    def _on_slice(self, event: Slice) -> None:
        self._add("Islice" if event.slice_type is SliceType.I else "PBslice")

    def _on_cu_intra(self, event: CuIntra) -> None:
        self._add("intraCU")

    def _on_cu_inter(self, event: CuInter) -> None:
        if not self.is_fa:
            self._add("interCU", depth=event.depth)

    def _on_cu_skip(self, event: CuSkip) -> None:
        self._add("skip", depth=event.depth)

    def _on_intra_luma_mode(self, event: IntraLumaMode) -> None:
        if self.is_fa:
            self._add(intra_mode_class(event.mode), depth=event.depth)
            if not event.mpm_hit:
                self._add("noMPM")
        else:
            self._add("all", depth=event.depth)

    def _on_pu_inter(self, event: PuInter) -> None:
        if self.is_fa:
            self._add(inter_pu_class(event.merge, event.part_mode), depth=event.depth)

    # --- Predicción inter ---

    def _on_motion_vector(self, event: MotionVector) -> None:
        # % de Python es euclídeo para divisor positivo
        frac_x = event.mv_x % 4 != 0
        frac_y = event.mv_y % 4 != 0
        area = event.pb_w * event.pb_h

        vertical = area if frac_y else 0
        horizontal = 0
        if frac_x:
            horizontal = area + (6 * event.pb_w if frac_y else 0)

        if self.is_fa:
            if vertical:
                self._add("fracpelVer", vertical, event.depth)
            if horizontal:
                self._add("fracpelHor", horizontal, event.depth)
            chroma_area = (event.pb_w / 2) * (event.pb_h / 2)
            if event.mv_x % 8 == 4:
                self._add("chrHalfpel", chroma_area, event.depth)
            if event.mv_y % 8 == 4:
                self._add("chrHalfpel", chroma_area, event.depth)
        elif vertical or horizontal:
            self._add("fracpelAvg", vertical + horizontal)

    def _on_bi_pu(self, event: BiPu) -> None:
        self._add("bi", (event.pb_w / 4) * (event.pb_h / 4))

    def _on_mvd(self, event: MvdLarge) -> None:
        if self.is_fa:
            self._add("MVD", self.log2(event.abs_mvd_minus2))

    # --- Residuo ---

    def _on_coeff(self, event: Coeff) -> None:
        self._add("coeff")

    def _on_coeff_g1(self, event: CoeffG1) -> None:
        if self.is_fa:
            self._add("coeffg1")

    def _on_csbf(self, event: CsbfNonDc) -> None:
        if self.is_fa:
            self._add("CSBF")

    def _on_coeff_remaining(self, event: CoeffRemaining) -> None:
        self._add("val", self.log2(event.value))

    def _on_cbf(self, event: Cbf) -> None:
        depth = chroma_tr_depth(event.depth, event.plane)
        if self.is_fa:
            mode = "Intra" if event.intra else "Inter"
            component = "Y" if event.plane is Plane.Y else "C"
            self._add(f"Tr{mode}{component}", depth=depth)
        else:
            self._add("Tr", depth=depth)

    def _on_transform_skip(self, event: TransformSkip) -> None:
        if self.is_fa:
            self._add("TSF")

    # --- Filtros in-loop ---

    def _on_boundary_strength(self, event: BoundaryStrength) -> None:
        self._add(f"Bs{event.bs}" if self.is_fa else "Bs")

    def _on_sao(self, event: SaoCtu) -> None:
        if self.is_fa:
            luma = {SaoType.BAND_OFFSET: "SAO_Y_BO", SaoType.EDGE_OFFSET: "SAO_Y_EO"}
            chroma = {SaoType.BAND_OFFSET: "SAO_C_BO", SaoType.EDGE_OFFSET: "SAO_C_EO"}
            if event.type_y:
                self._add(luma[SaoType(event.type_y)])
            for chroma_type in (event.type_cb, event.type_cr):
                if chroma_type:
                    self._add(chroma[SaoType(chroma_type)])
            if event.type_y and event.type_cb and event.type_cr:
                self._add("SAO_allComps")
        else:
            if event.type_y:
                self._add("SAO_Y")
            for chroma_type in (event.type_cb, event.type_cr):
                if chroma_type:
                    self._add("SAO_C")


def count_features(
    trace: SyntaxEventTrace,
    kind: FeatureKind,
    fixed_point_log: bool = False,
) -> FeatureVector:
    """
    Cuenta las features de una traza.

    Args:
        trace: Traza válida
        kind: FA (90 ids) o FS (27 ids)
        fixed_point_log: Usa la aproximación de punto fijo para MVD y val

    Returns:
        FeatureVector con todos los ids del catálogo
    """
    counter = FeatureCounter(kind, fixed_point_log=fixed_point_log)
    for event in trace.events:
        counter.feed(event)
    return counter.result()


# ========================================
# AGREGACIÓN FA → FS
# ========================================

_PASS_THROUGH = ("E_0", "Islice", "PBslice", "intraCU", "bi", "coeff", "val")


def aggregate_fa_to_fs(fa: FeatureVector) -> PartialFeatureVector:
    """
    Calcula todas las entradas FS derivables de un vector FA.

    interCU(d) no es derivable (FA solo ve los PUs, no el CU inter).

    Raises:
        WrongKind: Si el vector no es FA
    """
    if fa.model_kind is not FeatureKind.FA:
        raise WrongKind(FeatureKind.FA.value, fa.model_kind.value)

    n = fa.counts
    derived: Dict[FeatureId, float] = {}
    for name in _PASS_THROUGH:
        derived[FeatureId(name)] = n[FeatureId(name)]
    for d in range(0, 4):
        derived[FeatureId("skip", d)] = n[FeatureId("skip", d)]
    for d in range(1, 5):
        derived[FeatureId("all", d)] = sum(n[FeatureId(c, d)] for c in ("pla", "dc", "hvd", "ang"))
        derived[FeatureId("Tr", d)] = sum(
            n[FeatureId(c, d)] for c in ("TrIntraY", "TrIntraC", "TrInterY", "TrInterC")
        )
    derived[FeatureId("fracpelAvg")] = sum(
        n[FeatureId("fracpelVer", d)] + n[FeatureId("fracpelHor", d)] for d in range(0, 4)
    )
    derived[FeatureId("Bs")] = n[FeatureId("Bs0")] + n[FeatureId("Bs1")] + n[FeatureId("Bs2")]
    derived[FeatureId("SAO_Y")] = n[FeatureId("SAO_Y_BO")] + n[FeatureId("SAO_Y_EO")]
    derived[FeatureId("SAO_C")] = n[FeatureId("SAO_C_BO")] + n[FeatureId("SAO_C_EO")]

    non_derivable = frozenset(FeatureId("interCU", d) for d in range(0, 4))
    ordered = {fid: derived[fid] for fid in FEATURE_CATALOG[FeatureKind.FS] if fid in derived}
    return PartialFeatureVector(counts=ordered, non_derivable=non_derivable)
