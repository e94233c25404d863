from .bitstream_meta import BitstreamMeta, PeCounts, MemCounts
from .trained_model import ModelId, HingeDirection, HingeTerm, Provenance, TrainedModel
from .model_catalog import (
    PARAMETER_NAMES,
    MODEL_ARITY,
    FEATURE_MODELS,
    LINEAR_MODELS,
    NONLINEAR_MODELS,
    PE_VARIABLES,
    H1T_EXPONENTS,
    H1T_NORMALIZERS,
    VariableRequirement,
    variables_required,
)

__all__ = [
    'BitstreamMeta',
    'PeCounts',
    'MemCounts',
    'ModelId',
    'HingeDirection',
    'HingeTerm',
    'Provenance',
    'TrainedModel',
    'PARAMETER_NAMES',
    'MODEL_ARITY',
    'FEATURE_MODELS',
    'LINEAR_MODELS',
    'NONLINEAR_MODELS',
    'PE_VARIABLES',
    'H1T_EXPONENTS',
    'H1T_NORMALIZERS',
    'VariableRequirement',
    'variables_required',
]
