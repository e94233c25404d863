"""
Trace Codec - Lectura y escritura del formato de trazas de instrumentación.

Formato (UTF-8, una línea por evento):

    TAG key=value key=value ...

- Líneas vacías se ignoran; `#` al inicio de línea es un comentario.
- Enteros decimales con `-` opcional; booleanos 0/1; enums literales.
- En la entrada las claves pueden venir en cualquier orden; faltantes,
  duplicadas o desconocidas son MalformedLine. La salida usa el orden canónico.

Tags y claves (orden canónico):

    SB
    SL  t=I|P|B
    CUI d=0..4
    CUP d=0..3
    CUS d=0..3
    ILM d=1..4 m=0..34 mpm=0|1
    PU  d=0..3 merge=0|1 part=0,1,2,4..7   (AMP 4..7 solo con d<=2)
    MV  d=0..3 w= h= x= y=                  (w, h múltiplos positivos de 4)
    BI  d=0..3 w= h=
    MVD v>=0
    C | CG1 | CSB | TSF
    CR  v>=0
    CBF d=1..4 p=Y|Cb|Cr intra=0|1
    BS  bs=0..2
    SAO y=0..2 cb=0..2 cr=0..2
"""

import re
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Tuple, Union

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
    VALID_PART_MODES,
)
from src.shared.exceptions import (
    DuplicateStreamBegin,
    MalformedLine,
    MissingStreamBegin,
    RangeViolation,
)

_INT_PATTERN = re.compile(r"-?[0-9]+")


class _OutOfRange(Exception):
    def __init__(self, detail: str):
        self.detail = detail


# ========================================
# CONVERSORES DE CAMPO
# ========================================

def _int_in(lo: int = None, hi: int = None) -> Callable[[int], int]:
    def check(value: int) -> int:
        if (lo is not None and value < lo) or (hi is not None and value > hi):
            low = "-inf" if lo is None else lo
            high = "inf" if hi is None else hi
            raise _OutOfRange(f"{value} fuera de [{low}, {high}]")
        return value
    return check


def _flag(value: int) -> bool:
    if value not in (0, 1):
        raise _OutOfRange(f"{value} no es 0/1")
    return bool(value)


def _block_side(value: int) -> int:
    if value <= 0 or value % 4 != 0:
        raise _OutOfRange(f"{value} no es múltiplo positivo de 4")
    return value


def _part_mode(value: int) -> int:
    if value not in VALID_PART_MODES:
        raise _OutOfRange(f"part_mode {value} no permitido")
    return value


def _enum(enum_cls) -> Callable[[str], object]:
    def check(raw: str):
        try:
            return enum_cls(raw)
        except ValueError:
            allowed = "|".join(member.value for member in enum_cls)
            raise _OutOfRange(f"'{raw}' no está en {allowed}")
    return check


@dataclass(frozen=True)
class _Field:
    key: str
    attr: str
    convert: Callable
    is_int: bool = True


@dataclass(frozen=True)
class _EventSchema:
    tag: str
    event_cls: type
    fields: Tuple[_Field, ...] = ()


_DEPTH_0_3 = _int_in(0, 3)

_SCHEMAS: Tuple[_EventSchema, ...] = (
    _EventSchema("SB", StreamBegin),
    _EventSchema("SL", Slice, (_Field("t", "slice_type", _enum(SliceType), is_int=False),)),
    _EventSchema("CUI", CuIntra, (_Field("d", "depth", _int_in(0, 4)),)),
    _EventSchema("CUP", CuInter, (_Field("d", "depth", _DEPTH_0_3),)),
    _EventSchema("CUS", CuSkip, (_Field("d", "depth", _DEPTH_0_3),)),
    _EventSchema("ILM", IntraLumaMode, (
        _Field("d", "depth", _int_in(1, 4)),
        _Field("m", "mode", _int_in(0, 34)),
        _Field("mpm", "mpm_hit", _flag),
    )),
    _EventSchema("PU", PuInter, (
        _Field("d", "depth", _DEPTH_0_3),
        _Field("merge", "merge", _flag),
        _Field("part", "part_mode", _part_mode),
    )),
    _EventSchema("MV", MotionVector, (
        _Field("d", "depth", _DEPTH_0_3),
        _Field("w", "pb_w", _block_side),
        _Field("h", "pb_h", _block_side),
        _Field("x", "mv_x", _int_in()),
        _Field("y", "mv_y", _int_in()),
    )),
    _EventSchema("BI", BiPu, (
        _Field("d", "depth", _DEPTH_0_3),
        _Field("w", "pb_w", _block_side),
        _Field("h", "pb_h", _block_side),
    )),
    _EventSchema("MVD", MvdLarge, (_Field("v", "abs_mvd_minus2", _int_in(0)),)),
    _EventSchema("C", Coeff),
    _EventSchema("CG1", CoeffG1),
    _EventSchema("CSB", CsbfNonDc),
    _EventSchema("CR", CoeffRemaining, (_Field("v", "value", _int_in(0)),)),
    _EventSchema("CBF", Cbf, (
        _Field("d", "depth", _int_in(1, 4)),
        _Field("p", "plane", _enum(Plane), is_int=False),
        _Field("intra", "intra", _flag),
    )),
    _EventSchema("TSF", TransformSkip),
    _EventSchema("BS", BoundaryStrength, (_Field("bs", "bs", _int_in(0, 2)),)),
    _EventSchema("SAO", SaoCtu, (
        _Field("y", "type_y", _int_in(0, 2)),
        _Field("cb", "type_cb", _int_in(0, 2)),
        _Field("cr", "type_cr", _int_in(0, 2)),
    )),
)

_SCHEMA_BY_TAG: Dict[str, _EventSchema] = {schema.tag: schema for schema in _SCHEMAS}
_SCHEMA_BY_CLASS: Dict[type, _EventSchema] = {schema.event_cls: schema for schema in _SCHEMAS}


# ========================================
# PARSE
# ========================================

def _parse_line(line: str, line_no: int) -> SyntaxEvent:
    tokens = line.split()
    tag, pairs = tokens[0], tokens[1:]
    schema = _SCHEMA_BY_TAG.get(tag)
    if schema is None:
        raise MalformedLine(line_no, f"tag desconocido '{tag}'")

    raw: Dict[str, str] = {}
    for token in pairs:
        key, sep, value = token.partition("=")
        if not sep or not key or not value:
            raise MalformedLine(line_no, f"token '{token}' no es key=value")
        if key in raw:
            raise MalformedLine(line_no, f"clave '{key}' duplicada")
        raw[key] = value

    expected = [f.key for f in schema.fields]
    unknown = sorted(set(raw) - set(expected))
    if unknown:
        raise MalformedLine(line_no, f"claves desconocidas para {tag}: {', '.join(unknown)}")
    missing = [key for key in expected if key not in raw]
    if missing:
        raise MalformedLine(line_no, f"faltan claves para {tag}: {', '.join(missing)}")

    values = {}
    for f in schema.fields:
        text = raw[f.key]
        if f.is_int:
            if not _INT_PATTERN.fullmatch(text):
                raise MalformedLine(line_no, f"'{f.key}={text}' no es un entero")
            text = int(text)
        try:
            values[f.attr] = f.convert(text)
        except _OutOfRange as e:
            raise RangeViolation(line_no, f.key, e.detail)

    # AMP requiere CU de al menos 16x16
    if schema.event_cls is PuInter and values["part_mode"] in AMP_PART_MODES and values["depth"] > 2:
        raise RangeViolation(line_no, "part", "AMP no permitido con d=3")

    return schema.event_cls(**values)


def _iter_lines(source: Union[bytes, str, Iterable[str]]) -> Iterable[str]:
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as e:
            raise MalformedLine(1, f"UTF-8 inválido ({e.reason})") from e
    if isinstance(source, str):
        return source.splitlines()
    return source


def parse_trace(source: Union[bytes, str, Iterable[str]], stream_id: str = "stream") -> SyntaxEventTrace:
    """
    Parsea una traza completa validando gramática y rangos.

    Args:
        source: Contenido del archivo (bytes, texto o iterable de líneas)
        stream_id: Identificador del bit stream (normalmente el nombre del archivo)

    Returns:
        SyntaxEventTrace con los eventos en orden de archivo

    Raises:
        MalformedLine, RangeViolation, MissingStreamBegin, DuplicateStreamBegin
    """
    events: List[SyntaxEvent] = []
    for line_no, line in enumerate(_iter_lines(source), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        event = _parse_line(stripped, line_no)
        if isinstance(event, StreamBegin):
            if events:
                raise DuplicateStreamBegin(line_no)
        elif not events:
            raise MissingStreamBegin(line_no)
        events.append(event)

    if not events:
        raise MissingStreamBegin()
    return SyntaxEventTrace(stream_id=stream_id, events=tuple(events))


# ========================================
# SERIALIZE
# ========================================

def _format_value(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, (SliceType, Plane)):
        return value.value
    return str(int(value))


def serialize_event(event: SyntaxEvent) -> str:
    schema = _SCHEMA_BY_CLASS[type(event)]
    parts = [schema.tag]
    parts += [f"{f.key}={_format_value(getattr(event, f.attr))}" for f in schema.fields]
    return " ".join(parts)


def serialize_trace(trace: SyntaxEventTrace) -> str:
    """Escribe la traza en orden canónico de claves, una línea por evento."""
    return "".join(serialize_event(event) + "\n" for event in trace.events)
