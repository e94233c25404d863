from .trace_codec import parse_trace, serialize_trace, serialize_event

__all__ = [
    'parse_trace',
    'serialize_trace',
    'serialize_event',
]
