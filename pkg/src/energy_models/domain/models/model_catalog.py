"""
Catálogo de modelos: aridad, nombres de parámetros y variables requeridas.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

from src.bitstream.domain.models.feature_vector import FEATURE_CATALOG, FeatureKind
from src.energy_models.domain.models.trained_model import ModelId

PE_VARIABLES: Tuple[str, ...] = ("pe_if", "pe_l1dm")

H1T_EXPONENTS: Tuple[str, ...] = ("P_max", "c_S", "c_f", "c_q")
H1T_NORMALIZERS: Tuple[str, ...] = ("S_max", "f_max", "q_min")

PARAMETER_NAMES: Dict[ModelId, Tuple[str, ...]] = {
    ModelId.FA: tuple(fid.label for fid in FEATURE_CATALOG[FeatureKind.FA]),
    ModelId.FS: tuple(fid.label for fid in FEATURE_CATALOG[FeatureKind.FS]),
    ModelId.M: ("e_ra", "e_wa"),
    ModelId.T: ("E_0", "P_mean"),
    ModelId.H1T: H1T_EXPONENTS + H1T_NORMALIZERS,
    ModelId.H2T: ("c1", "c2", "c3", "c4"),
    ModelId.H2: ("c1", "c2", "c3", "c4"),
    ModelId.H3: ("C", "h3_alpha", "h3_beta", "gamma"),
}

# PE no tiene aridad fija (número de términos MARS)
MODEL_ARITY: Dict[ModelId, int] = {model_id: len(names) for model_id, names in PARAMETER_NAMES.items()}

FEATURE_MODELS: Dict[ModelId, FeatureKind] = {
    ModelId.FA: FeatureKind.FA,
    ModelId.FS: FeatureKind.FS,
}

LINEAR_MODELS = frozenset({ModelId.FA, ModelId.FS, ModelId.M, ModelId.T, ModelId.H2T, ModelId.H2})
NONLINEAR_MODELS = frozenset({ModelId.H1T, ModelId.H3})


@dataclass(frozen=True)
class VariableRequirement:
    variables: FrozenSet[str]
    execution_required: bool


_META_VARIABLES: Dict[ModelId, Tuple[FrozenSet[str], bool]] = {
    ModelId.PE: (frozenset(PE_VARIABLES), True),
    ModelId.M: (frozenset({"n_ra", "n_wa"}), True),
    ModelId.T: (frozenset({"t_dec"}), True),
    ModelId.H1T: (frozenset({"S", "f", "qp", "t_dec"}), True),
    ModelId.H2T: (frozenset({"alpha", "b", "t_dec"}), True),
    ModelId.H2: (frozenset({"alpha", "b_pixel", "N", "S"}), False),
    ModelId.H3: (frozenset({"b_pixel", "N", "S"}), False),
}


def variables_required(model_id) -> VariableRequirement:
    """
    Variables que necesita un modelo y si hace falta ejecutar el decodificador.

    Para FA/FS las variables son los números de features (90 o 27).
    """
    model_id = ModelId(model_id)
    if model_id in FEATURE_MODELS:
        labels = frozenset(PARAMETER_NAMES[model_id])
        return VariableRequirement(variables=labels, execution_required=False)
    variables, execution = _META_VARIABLES[model_id]
    return VariableRequirement(variables=variables, execution_required=execution)
