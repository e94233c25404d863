from .syntax_event import (
    SyntaxEvent,
    SyntaxEventTrace,
    StreamBegin,
    Slice,
    SliceType,
    CuIntra,
    CuInter,
    CuSkip,
    IntraLumaMode,
    PuInter,
    MotionVector,
    BiPu,
    MvdLarge,
    Coeff,
    CoeffG1,
    CsbfNonDc,
    CoeffRemaining,
    Cbf,
    Plane,
    TransformSkip,
    BoundaryStrength,
    SaoCtu,
    SaoType,
    SMP_PART_MODES,
    AMP_PART_MODES,
    VALID_PART_MODES,
)
from .feature_vector import (
    FeatureKind,
    FeatureId,
    FeatureVector,
    PartialFeatureVector,
    FEATURE_CATALOG,
    REAL_VALUED_NAMES,
    catalog,
)

__all__ = [
    # Trazas
    'SyntaxEvent',
    'SyntaxEventTrace',
    'StreamBegin',
    'Slice',
    'SliceType',
    'CuIntra',
    'CuInter',
    'CuSkip',
    'IntraLumaMode',
    'PuInter',
    'MotionVector',
    'BiPu',
    'MvdLarge',
    'Coeff',
    'CoeffG1',
    'CsbfNonDc',
    'CoeffRemaining',
    'Cbf',
    'Plane',
    'TransformSkip',
    'BoundaryStrength',
    'SaoCtu',
    'SaoType',
    'SMP_PART_MODES',
    'AMP_PART_MODES',
    'VALID_PART_MODES',

    # Features
    'FeatureKind',
    'FeatureId',
    'FeatureVector',
    'PartialFeatureVector',
    'FEATURE_CATALOG',
    'REAL_VALUED_NAMES',
    'catalog',
]
