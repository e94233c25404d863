"""
Oráculo ingenuo de conteo: recorre la traza completa una vez por cada id del catálogo.

Se escribe a propósito sin compartir código con FeatureCounter.
"""

import math

from src.bitstream.domain.models.feature_vector import FEATURE_CATALOG, FeatureKind, FeatureVector
from src.bitstream.domain.models.syntax_event import (
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
    TransformSkip,
)

_MODE_CLASSES = {
    "pla": lambda m: m == 0,
    "dc": lambda m: m == 1,
    "hvd": lambda m: m in (2, 10, 26, 34),
    "ang": lambda m: 3 <= m <= 33 and m not in (10, 26),
}

_PU_CLASSES = {
    "merge": (True, {0}),
    "mergeSMP": (True, {1, 2}),
    "mergeAMP": (True, {4, 5, 6, 7}),
    "inter": (False, {0}),
    "interSMP": (False, {1, 2}),
    "interAMP": (False, {4, 5, 6, 7}),
}


def _tr_depth(event: Cbf) -> int:
    return event.depth if event.plane == Plane.Y else min(event.depth + 1, 4)


def _frac_ver(e: MotionVector) -> float:
    return e.pb_w * e.pb_h if e.mv_y % 4 else 0


def _frac_hor(e: MotionVector) -> float:
    if not e.mv_x % 4:
        return 0
    return e.pb_w * e.pb_h + (6 * e.pb_w if e.mv_y % 4 else 0)


def _chr_half(e: MotionVector) -> float:
    hits = (e.mv_x % 8 == 4) + (e.mv_y % 8 == 4)
    return hits * (e.pb_w / 2) * (e.pb_h / 2)


def _contribution(name: str, depth, kind: FeatureKind, e) -> float:
    fa = kind is FeatureKind.FA
    if name == "E_0":
        return 0.0
    if name == "Islice":
        return float(isinstance(e, Slice) and e.slice_type == SliceType.I)
    if name == "PBslice":
        return float(isinstance(e, Slice) and e.slice_type != SliceType.I)
    if name == "intraCU":
        return float(isinstance(e, CuIntra))
    if name in _MODE_CLASSES:
        return float(isinstance(e, IntraLumaMode) and e.depth == depth and _MODE_CLASSES[name](e.mode))
    if name == "all":
        return float(isinstance(e, IntraLumaMode) and e.depth == depth)
    if name == "noMPM":
        return float(isinstance(e, IntraLumaMode) and not e.mpm_hit)
    if name == "skip":
        return float(isinstance(e, CuSkip) and e.depth == depth)
    if name == "interCU":
        return float(isinstance(e, CuInter) and e.depth == depth)
    if name in _PU_CLASSES:
        merge, modes = _PU_CLASSES[name]
        return float(isinstance(e, PuInter) and e.depth == depth and e.merge == merge and e.part_mode in modes)
    if name in ("fracpelVer", "fracpelHor", "chrHalfpel", "fracpelAvg"):
        if not isinstance(e, MotionVector):
            return 0.0
        if name == "fracpelAvg":
            return float(_frac_ver(e) + _frac_hor(e))
        if e.depth != depth:
            return 0.0
        return float({"fracpelVer": _frac_ver, "fracpelHor": _frac_hor, "chrHalfpel": _chr_half}[name](e))
    if name == "bi":
        return (e.pb_w * e.pb_h) / 16 if isinstance(e, BiPu) else 0.0
    if name == "MVD":
        return math.log2(e.abs_mvd_minus2 + 2) if isinstance(e, MvdLarge) else 0.0
    if name == "val":
        return math.log2(e.value + 2) if isinstance(e, CoeffRemaining) else 0.0
    if name == "coeff":
        return float(isinstance(e, Coeff))
    if name == "coeffg1":
        return float(isinstance(e, CoeffG1))
    if name == "CSBF":
        return float(isinstance(e, CsbfNonDc))
    if name == "TSF":
        return float(isinstance(e, TransformSkip))
    if name.startswith("Tr"):
        if not isinstance(e, Cbf) or _tr_depth(e) != depth:
            return 0.0
        if name == "Tr":
            return 1.0
        wants_intra = name.startswith("TrIntra")
        wants_luma = name.endswith("Y")
        return float(e.intra == wants_intra and (e.plane == Plane.Y) == wants_luma)
    if name == "Bs":
        return float(isinstance(e, BoundaryStrength))
    if name in ("Bs0", "Bs1", "Bs2"):
        return float(isinstance(e, BoundaryStrength) and e.bs == int(name[-1]))
    if isinstance(e, SaoCtu):
        chroma = (e.type_cb, e.type_cr)
        return float({
            "SAO_Y_BO": e.type_y == 1,
            "SAO_Y_EO": e.type_y == 2,
            "SAO_C_BO": chroma.count(1),
            "SAO_C_EO": chroma.count(2),
            "SAO_allComps": e.type_y != 0 and 0 not in chroma,
            "SAO_Y": e.type_y != 0,
            "SAO_C": sum(1 for t in chroma if t != 0),
        }[name])
    if name.startswith("SAO"):
        return 0.0
    raise KeyError(f"{kind.value}: {name} sin regla en el oráculo")


def naive_count(trace, kind: FeatureKind) -> FeatureVector:
    counts = {}
    for fid in FEATURE_CATALOG[kind]:
        if fid.name == "E_0":
            counts[fid] = float(any(isinstance(e, StreamBegin) for e in trace.events))
            continue
        counts[fid] = sum(_contribution(fid.name, fid.depth, kind, e) for e in trace.events)
    return FeatureVector(kind, counts)
