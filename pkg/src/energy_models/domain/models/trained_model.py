"""
Entidades TrainedModel / HingeTerm - Modelos de energía ya ajustados.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from src.shared.exceptions import DataException, DimensionMismatch


class ModelId(str, Enum):
    FA = "FA"
    FS = "FS"
    PE = "PE"
    M = "M"
    T = "T"
    H1T = "H1T"
    H2T = "H2T"
    H2 = "H2"
    H3 = "H3"


class HingeDirection(str, Enum):
    CONSTANT = "constant"
    POSITIVE = "max(0,x-k)"
    NEGATIVE = "max(0,k-x)"


@dataclass(frozen=True)
class HingeTerm:
    """Función base de MARS sobre una sola variable (modelo aditivo)."""
    variable_index: Optional[int]
    direction: HingeDirection
    knot: Optional[float]
    coefficient: float

    def __post_init__(self):
        object.__setattr__(self, "direction", HingeDirection(self.direction))
        if self.direction is HingeDirection.CONSTANT:
            if self.knot is not None or self.variable_index is not None:
                raise DataException("El término constante no lleva nudo ni variable")
        elif self.knot is None or not math.isfinite(self.knot) or self.variable_index is None:
            raise DataException("Un término hinge necesita variable y nudo finito")

    def basis(self, x: np.ndarray) -> np.ndarray:
        """Valor de la función base (sin coeficiente) para filas de X (M x n_vars)."""
        x = np.atleast_2d(np.asarray(x, dtype=float))
        if self.direction is HingeDirection.CONSTANT:
            return np.ones(x.shape[0])
        column = x[:, self.variable_index]
        if self.direction is HingeDirection.POSITIVE:
            return np.maximum(0.0, column - self.knot)
        return np.maximum(0.0, self.knot - column)

    def describe(self, variable_names: Sequence[str]) -> str:
        if self.direction is HingeDirection.CONSTANT:
            return "1"
        name = variable_names[self.variable_index]
        if self.direction is HingeDirection.POSITIVE:
            return f"max(0,{name}-{self.knot:.6g})"
        return f"max(0,{self.knot:.6g}-{name})"


@dataclass(frozen=True)
class Provenance:
    seed: Optional[int] = None
    fold_spec: Optional[str] = None
    dataset_digest: Optional[str] = None


@dataclass(frozen=True)
class TrainedModel:
    """
    Modelo ajustado: identificador más vector de parámetros con nombre.

    Para H1T los normalizadores S_max, f_max, q_min forman parte de los 7
    parámetros y se reflejan en `normalizers`. Para PE los parámetros son los
    coeficientes de `mars_basis`.
    """
    model_id: ModelId
    param_names: Tuple[str, ...]
    params: Tuple[float, ...]
    normalizers: Optional[Dict[str, float]] = None
    mars_basis: Optional[Tuple[HingeTerm, ...]] = None
    provenance: Provenance = field(default_factory=Provenance)

    def __post_init__(self):
        # Lazy import: el catálogo depende de ModelId
        from src.energy_models.domain.models.model_catalog import MODEL_ARITY

        model_id = ModelId(self.model_id)
        object.__setattr__(self, "model_id", model_id)
        object.__setattr__(self, "param_names", tuple(self.param_names))
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))

        if len(self.param_names) != len(self.params):
            raise DimensionMismatch(len(self.param_names), len(self.params), "nombres vs valores")
        expected = MODEL_ARITY.get(model_id)
        if expected is not None and len(self.params) != expected:
            raise DimensionMismatch(expected, len(self.params), f"parámetros de {model_id.value}")
        if model_id is ModelId.PE:
            basis = tuple(self.mars_basis or ())
            if len(basis) != len(self.params) or not basis:
                raise DimensionMismatch(len(basis), len(self.params), "términos MARS")
            object.__setattr__(self, "mars_basis", basis)
        if model_id is ModelId.H1T:
            mirrored = {name: self.param(name) for name in ("S_max", "f_max", "q_min")}
            object.__setattr__(self, "normalizers", mirrored)

    def param(self, name: str) -> float:
        return self.params[self.param_names.index(name)]

    def param_vector(self) -> np.ndarray:
        return np.array(self.params, dtype=float)

    def as_dict(self) -> Dict[str, float]:
        return dict(zip(self.param_names, self.params))
