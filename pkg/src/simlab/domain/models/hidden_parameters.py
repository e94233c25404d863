"""
Parámetros ocultos del laboratorio simulado: la "verdad" que los ajustes deben recuperar.

Las energías específicas de features son positivas salvo SAO_allComps.
"""

from typing import Dict, Mapping, Optional

from src.bitstream.domain.models.feature_vector import FEATURE_CATALOG, FeatureId, FeatureKind
from src.energy_models.domain.models.model_catalog import PARAMETER_NAMES
from src.energy_models.domain.models.trained_model import (
    HingeDirection,
    HingeTerm,
    ModelId,
    Provenance,
    TrainedModel,
)
from src.shared.exceptions import ConfigInvalid

# Energía base por etiqueta (julios); las features con profundidad se escalan por 2^-d
_FEATURE_BASE_ENERGY: Dict[str, float] = {
    "E_0": 2e-3,
    "Islice": 4e-4,
    "PBslice": 3e-4,
    "intraCU": 3e-5,
    # FA
    "pla": 2.4e-5, "dc": 1.8e-5, "hvd": 2.1e-5, "ang": 2.7e-5, "noMPM": 4e-6,
    "skip": 1.6e-5,
    "merge": 2.2e-5, "mergeSMP": 2.6e-5, "mergeAMP": 2.9e-5,
    "inter": 2.5e-5, "interSMP": 2.8e-5, "interAMP": 3.1e-5,
    "fracpelHor": 3e-8, "fracpelVer": 2.5e-8, "chrHalfpel": 1.5e-8,
    "bi": 6e-8, "MVD": 1.2e-6,
    "coeff": 8e-7, "coeffg1": 5e-7, "CSBF": 2e-6, "val": 9e-7,
    "TrIntraY": 1.1e-5, "TrIntraC": 7e-6, "TrInterY": 1e-5, "TrInterC": 6e-6,
    "TSF": 3e-6,
    "Bs0": 1e-6, "Bs1": 2e-6, "Bs2": 3e-6,
    "SAO_Y_BO": 5e-6, "SAO_Y_EO": 6e-6, "SAO_C_BO": 3e-6, "SAO_C_EO": 4e-6,
    "SAO_allComps": -2e-6,
    # FS
    "all": 2.5e-5, "interCU": 2.7e-5, "fracpelAvg": 2.8e-8,
    "Tr": 9e-6, "Bs": 2e-6, "SAO_Y": 5.5e-6, "SAO_C": 3.5e-6,
}

_META_DEFAULTS: Dict[ModelId, Dict[str, float]] = {
    ModelId.H1T: {
        "P_max": 3.0, "c_S": 0.8, "c_f": 0.2, "c_q": -0.15,
        "S_max": 2560.0 * 1600.0, "f_max": 60.0, "q_min": 10.0,
    },
    ModelId.H2T: {"c1": 1e-8, "c2": 0.3, "c3": 2e-8, "c4": 1.2},
    ModelId.H2: {"c1": 1e-8, "c2": 1e-8, "c3": 5e-8, "c4": 2e-8},
    ModelId.H3: {"C": 0.05, "h3_alpha": 2e-8, "h3_beta": 4e-8, "gamma": 0.8},
    ModelId.T: {"E_0": 0.05, "P_mean": 1.8},
    ModelId.M: {"e_ra": 2e-9, "e_wa": 3e-9},
}

_PE_DEFAULT_BASIS = (
    HingeTerm(None, HingeDirection.CONSTANT, None, 0.02),
    HingeTerm(0, HingeDirection.POSITIVE, 0.0, 1e-9),
    HingeTerm(1, HingeDirection.POSITIVE, 0.0, 5e-8),
)


def _feature_energy(fid: FeatureId) -> float:
    base = _FEATURE_BASE_ENERGY[fid.name]
    return base * 2.0 ** -fid.depth if fid.depth is not None else base


def default_parameters(model_id) -> Dict[str, float]:
    """Parámetros ocultos por defecto, por nombre."""
    model_id = ModelId(model_id)
    if model_id in (ModelId.FA, ModelId.FS):
        kind = FeatureKind(model_id.value)
        return {fid.label: _feature_energy(fid) for fid in FEATURE_CATALOG[kind]}
    if model_id is ModelId.PE:
        return {f"B{i}": term.coefficient for i, term in enumerate(_PE_DEFAULT_BASIS)}
    return dict(_META_DEFAULTS[model_id])


def hidden_model(model_id, overrides: Optional[Mapping[str, float]] = None) -> TrainedModel:
    """
    Modelo oculto con los parámetros por defecto y los reemplazos indicados.

    Raises:
        ConfigInvalid: Si un reemplazo no es un parámetro del modelo
    """
    model_id = ModelId(model_id)
    values = default_parameters(model_id)
    unknown = sorted(set(overrides or {}) - set(values))
    if unknown:
        raise ConfigInvalid(f"parámetros desconocidos para {model_id.value}: {', '.join(unknown)}")
    values.update(overrides or {})

    if model_id is ModelId.PE:
        names = tuple(values)
        basis = tuple(
            HingeTerm(term.variable_index, term.direction, term.knot, values[name])
            for name, term in zip(names, _PE_DEFAULT_BASIS)
        )
        return TrainedModel(
            model_id=model_id,
            param_names=names,
            params=tuple(values.values()),
            mars_basis=basis,
            provenance=Provenance(fold_spec="hidden"),
        )

    names = PARAMETER_NAMES[model_id]
    return TrainedModel(
        model_id=model_id,
        param_names=names,
        params=tuple(values[name] for name in names),
        provenance=Provenance(fold_spec="hidden"),
    )
