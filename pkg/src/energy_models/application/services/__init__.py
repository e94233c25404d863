from .prediction_service import (
    predict,
    predict_feature_linear,
    predict_mars,
    predict_ram,
    predict_time,
    predict_h1t,
    predict_h2t,
    predict_h2,
    predict_h3,
    energy_breakdown,
    require_variables,
)

__all__ = [
    'predict',
    'predict_feature_linear',
    'predict_mars',
    'predict_ram',
    'predict_time',
    'predict_h1t',
    'predict_h2t',
    'predict_h2',
    'predict_h3',
    'energy_breakdown',
    'require_variables',
]
