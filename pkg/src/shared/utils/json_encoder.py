"""
JSON Encoder Helper - Convierte tipos numpy a tipos Python nativos.

Todos los documentos JSON (modelos entrenados, reportes de CV, verdad oculta)
pasan por aquí y se escriben con claves ordenadas para que la salida sea
idéntica byte a byte entre ejecuciones.
"""

import json
import math
from pathlib import Path
from typing import Any, Optional

import numpy as np


def convert_numpy_types(obj: Any) -> Any:
    """
    Convierte tipos numpy a tipos Python nativos recursivamente.

    Args:
        obj: Objeto a convertir (puede ser dict, list, numpy array, etc.)

    Returns:
        Objeto con tipos Python nativos
    """
    # Numpy scalars
    if isinstance(obj, np.integer):
        return int(obj)

    if isinstance(obj, np.floating):
        return float(obj)

    if isinstance(obj, np.bool_):
        return bool(obj)

    if isinstance(obj, np.ndarray):
        return [convert_numpy_types(item) for item in obj.tolist()]

    # Diccionarios (las claves no-str se convierten a str)
    if isinstance(obj, dict):
        return {str(key): convert_numpy_types(value) for key, value in obj.items()}

    # Listas, tuplas y sets
    if isinstance(obj, (list, tuple)):
        return [convert_numpy_types(item) for item in obj]

    if isinstance(obj, (set, frozenset)):
        return sorted(convert_numpy_types(item) for item in obj)

    # Otros tipos (str, int, float, bool, None)
    return obj


def safe_float(value: Any) -> Optional[float]:
    """Convierte un valor a float de forma segura (None y celdas vacías → None)."""
    if value is None:
        return None
    if isinstance(value, str) and value.strip() == "":
        return None
    result = float(value)
    if math.isnan(result):
        return None
    return result


def safe_int(value: Any) -> Optional[int]:
    """Convierte un valor a int de forma segura."""
    as_float = safe_float(value)
    if as_float is None:
        return None
    return int(round(as_float))


def dumps_stable(document: Any) -> str:
    """Serializa a JSON estable (claves ordenadas, indentación fija, salto final)."""
    return json.dumps(
        convert_numpy_types(document),
        sort_keys=True,
        indent=2,
        ensure_ascii=False,
        allow_nan=False,
    ) + "\n"


def write_json(path: Path, document: Any) -> None:
    Path(path).write_text(dumps_stable(document), encoding="utf-8")


def read_json(path: Path) -> Any:
    return json.loads(Path(path).read_text(encoding="utf-8"))
