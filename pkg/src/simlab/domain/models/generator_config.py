"""
Schema GeneratorConfig - Configuración validada del generador de datasets.
"""

from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.energy_models.domain.models.trained_model import ModelId
from src.shared.config import settings
from src.shared.exceptions import ConfigInvalid
from src.simlab.domain.models.sequence_catalog import DEFAULT_QPS, EXTENDED_QPS, FRAMES_PER_GROUP

# Conjunto por defecto más el extendido
KNOWN_QPS = frozenset(DEFAULT_QPS) | frozenset(EXTENDED_QPS)


class GeneratorConfig(BaseModel):
    """
    Parámetros del laboratorio simulado.

    El modelo objetivo genera las energías "medidas"; hidden_params reemplaza
    parámetros concretos de su verdad oculta.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    seed: int
    target_model: ModelId = ModelId.FS
    hidden_params: Dict[str, float] = Field(default_factory=dict)
    noise_rel_sigma: float = Field(default=settings.DEFAULT_NOISE, ge=0.0)
    trace_size_range: Tuple[int, int] = (2, 12)
    qps: Tuple[int, ...] = Field(default=DEFAULT_QPS, validate_default=True)
    frames_per_group: int = Field(default=FRAMES_PER_GROUP, ge=1, le=FRAMES_PER_GROUP)
    measurement_protocol: bool = False
    alpha: float = Field(default=settings.DEFAULT_ALPHA, gt=0.0, lt=1.0)
    beta: float = Field(default=settings.DEFAULT_BETA, gt=0.0)
    max_m: int = Field(default=settings.DEFAULT_MAX_MEASUREMENTS, ge=2)
    drop_outliers: bool = False
    power_traces: bool = False
    trace_noise_w: float = Field(default=0.0, ge=0.0)
    fixed_point_log: bool = settings.FIXED_POINT_LOG

    @field_validator("qps")
    @classmethod
    def _qps_known(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if not value:
            raise ValueError("qps no puede estar vacío")
        unknown = [q for q in value if q not in KNOWN_QPS]
        if unknown:
            raise ValueError(f"QPs fuera de {list(DEFAULT_QPS)} y de 5..50 paso 5: {unknown}")
        if len(set(value)) != len(value):
            raise ValueError("qps repetidos")
        return tuple(value)

    @field_validator("trace_size_range")
    @classmethod
    def _range_ordered(cls, value: Tuple[int, int]) -> Tuple[int, int]:
        lo, hi = value
        if lo < 1 or hi < lo:
            raise ValueError("trace_size_range debe cumplir 1 <= lo <= hi")
        return value


def build_generator_config(values: Optional[Dict] = None, **overrides) -> GeneratorConfig:
    """
    Valida la configuración del generador.

    Raises:
        ConfigInvalid: Si algún campo es inválido
    """
    merged = dict(values or {})
    merged.update({key: value for key, value in overrides.items() if value is not None})
    try:
        return GeneratorConfig(**merged)
    except ValidationError as e:
        details = "; ".join(f"{'.'.join(map(str, err['loc']))}: {err['msg']}" for err in e.errors())
        raise ConfigInvalid(details) from e
