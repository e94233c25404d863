"""
Tests del formato de trazas: parseo, validación de rangos y serialización.
"""

import numpy as np
import pytest

from src.bitstream.application.services.trace_generation_service import generate_random_trace
from src.bitstream.domain.models.syntax_event import (
    Cbf,
    MotionVector,
    Plane,
    PuInter,
    Slice,
    SliceType,
    StreamBegin,
    SyntaxEventTrace,
)
from src.bitstream.infrastructure.helpers.trace_codec import parse_trace, serialize_trace
from src.shared.exceptions import (
    DuplicateStreamBegin,
    MalformedLine,
    MissingStreamBegin,
    RangeViolation,
)


class TestParseTrace:
    """Parseo de líneas válidas."""

    def test_only_stream_begin(self):
        trace = parse_trace("SB\n")
        assert trace.events == (StreamBegin(),)

    def test_motion_vector_fields(self):
        trace = parse_trace("SB\nMV d=0 w=16 h=8 x=2 y=0\n")
        assert trace.events[1] == MotionVector(0, 16, 8, 2, 0)

    def test_keys_in_any_order(self):
        trace = parse_trace("SB\nCBF intra=1 p=Cb d=2\n")
        assert trace.events[1] == Cbf(depth=2, plane=Plane.CB, intra=True)

    def test_comments_and_blank_lines_ignored(self):
        trace = parse_trace("# cabecera\n\nSB\n# otro\nSL t=P\n")
        assert trace.events == (StreamBegin(), Slice(SliceType.P))

    def test_negative_motion_vectors(self):
        trace = parse_trace(b"SB\nMV d=1 w=8 h=8 x=-3 y=-8\n")
        assert trace.events[1].mv_x == -3

    def test_stream_id_is_kept(self):
        assert parse_trace("SB\n", stream_id="foo").stream_id == "foo"


class TestParseErrors:
    """Errores de gramática y de rango."""

    def test_part_mode_three_is_range_violation(self):
        with pytest.raises(RangeViolation) as exc_info:
            parse_trace("SB\nPU d=0 merge=1 part=3\n")
        assert exc_info.value.line_no == 2
        assert exc_info.value.field == "part"

    def test_amp_at_depth_three_is_range_violation(self):
        with pytest.raises(RangeViolation):
            parse_trace("SB\nPU d=3 merge=0 part=4\n")

    @pytest.mark.parametrize("line,field", [
        ("CUP d=4", "d"),
        ("ILM d=0 m=3 mpm=1", "d"),
        ("ILM d=1 m=35 mpm=1", "m"),
        ("MV d=0 w=6 h=8 x=0 y=0", "w"),
        ("BS bs=3", "bs"),
        ("SAO y=0 cb=3 cr=0", "cb"),
        ("MVD v=-1", "v"),
        ("CBF d=5 p=Y intra=0", "d"),
        ("PU d=0 merge=2 part=0", "merge"),
    ])
    def test_out_of_range_fields(self, line, field):
        with pytest.raises(RangeViolation) as exc_info:
            parse_trace(f"SB\n{line}\n")
        assert exc_info.value.field == field

    @pytest.mark.parametrize("line", [
        "XX d=1",
        "CUS",
        "CUS d=1 d=2",
        "CUS d=1 q=2",
        "CUS d=uno",
        "CUS d",
        "SL t=X",
    ])
    def test_malformed_lines(self, line):
        with pytest.raises((MalformedLine, RangeViolation)):
            parse_trace(f"SB\n{line}\n")

    def test_unknown_tag_reports_line(self):
        with pytest.raises(MalformedLine) as exc_info:
            parse_trace("SB\nC\nXX\n")
        assert exc_info.value.line_no == 3

    def test_missing_stream_begin(self):
        with pytest.raises(MissingStreamBegin):
            parse_trace("SL t=I\n")

    def test_empty_input(self):
        with pytest.raises(MissingStreamBegin):
            parse_trace("")

    def test_duplicate_stream_begin(self):
        with pytest.raises(DuplicateStreamBegin):
            parse_trace("SB\nC\nSB\n")

    def test_trace_object_requires_stream_begin(self):
        with pytest.raises(MissingStreamBegin):
            SyntaxEventTrace("x", (Slice(SliceType.I),))

    @pytest.mark.parametrize("value", ["\u0663", "\uff11", "1.0", "+1", "0x1"])
    def test_non_ascii_or_non_decimal_integers(self, value):
        with pytest.raises(MalformedLine):
            parse_trace(f"SB\nCUS d={value}\n")


# Valores fuera de rango por tag y clave
OUT_OF_RANGE = {
    "SL": {"t": ["X", "i"]},
    "CUI": {"d": ["5", "-1"]},
    "CUP": {"d": ["4", "-1"]},
    "CUS": {"d": ["4"]},
    "ILM": {"d": ["0", "5"], "m": ["35", "-1"], "mpm": ["2"]},
    "PU": {"d": ["4"], "merge": ["2", "-1"], "part": ["3", "8"]},
    "MV": {"d": ["4"], "w": ["0", "6", "-4"], "h": ["2", "0"]},
    "BI": {"d": ["-1"], "w": ["3"], "h": ["-8"]},
    "MVD": {"v": ["-1"]},
    "CR": {"v": ["-5"]},
    "CBF": {"d": ["0", "5"], "p": ["Q"], "intra": ["2"]},
    "BS": {"bs": ["3", "-1"]},
    "SAO": {"y": ["3"], "cb": ["-1"], "cr": ["7"]},
}


class TestParseMutations:
    """Trazas válidas con un único campo alterado."""

    def test_single_mutated_field_is_reported(self, random_traces):
        rng = np.random.default_rng(77)
        checked = 0
        for trace in random_traces[:25]:
            lines = serialize_trace(trace).splitlines()
            candidates = [i for i, line in enumerate(lines) if line.split()[0] in OUT_OF_RANGE]
            for i in rng.choice(candidates, size=min(8, len(candidates)), replace=False):
                tokens = lines[i].split()
                keys = sorted(OUT_OF_RANGE[tokens[0]])
                key = keys[int(rng.integers(len(keys)))]
                bad = rng.choice(OUT_OF_RANGE[tokens[0]][key])
                mutated = [tokens[0]] + [
                    f"{key}={bad}" if token.split("=")[0] == key else token for token in tokens[1:]
                ]
                text = "\n".join(lines[:i] + [" ".join(mutated)] + lines[i + 1:])

                with pytest.raises(RangeViolation) as exc_info:
                    parse_trace(text)
                assert exc_info.value.line_no == i + 1
                assert exc_info.value.field == key
                checked += 1
        assert checked > 100

    def test_unmutated_traces_parse(self, random_traces):
        for trace in random_traces[:25]:
            assert parse_trace(serialize_trace(trace), stream_id=trace.stream_id) == trace


class TestSerialization:
    """Serialización canónica."""

    def test_canonical_key_order(self):
        trace = parse_trace("SB\nPU part=2 merge=0 d=1\n")
        assert serialize_trace(trace) == "SB\nPU d=1 merge=0 part=2\n"

    def test_serialize_is_idempotent(self, random_traces):
        for trace in random_traces[:10]:
            text = serialize_trace(trace)
            assert serialize_trace(parse_trace(text, stream_id=trace.stream_id)) == text

    def test_round_trip_preserves_events(self, random_traces):
        for trace in random_traces[:10]:
            parsed = parse_trace(serialize_trace(trace), stream_id=trace.stream_id)
            assert parsed == trace


class TestGenerateRandomTrace:
    """Trazas sintéticas deterministas."""

    def test_same_seed_same_trace(self):
        first = serialize_trace(generate_random_trace(1, 10))
        second = serialize_trace(generate_random_trace(1, 10))
        assert first == second

    def test_different_seeds_differ(self):
        assert serialize_trace(generate_random_trace(1, 50)) != serialize_trace(generate_random_trace(2, 50))

    def test_size_hint_is_respected(self):
        trace = generate_random_trace(3, 200)
        assert len(trace) > 200

    def test_invalid_size_hint(self):
        with pytest.raises(ValueError):
            generate_random_trace(1, 0)

    def test_every_variant_reachable(self):
        trace = generate_random_trace(11, 5000)
        seen = {type(event) for event in trace.events}
        assert MotionVector in seen
        assert PuInter in seen
        assert Cbf in seen
        assert len(seen) == 18
