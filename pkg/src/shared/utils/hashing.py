import hashlib
from pathlib import Path

_CHUNK = 1 << 16


def compute_sha256(path: Path) -> str:
    """Digest hexadecimal del contenido del archivo (procedencia del dataset)."""
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(_CHUNK), b""):
            digest.update(chunk)
    return digest.hexdigest()
