from .json_encoder import convert_numpy_types, safe_float, safe_int, dumps_stable, write_json, read_json
from .hashing import compute_sha256

__all__ = [
    'convert_numpy_types',
    'safe_float',
    'safe_int',
    'dumps_stable',
    'write_json',
    'read_json',
    'compute_sha256',
]
