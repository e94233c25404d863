"""
RunConfig - Opciones validadas de una invocación del CLI.

Precedencia: flags explícitos > archivo --config (key=value) > Settings (DECWATT_*) > valores por defecto.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional

from dotenv import dotenv_values
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from src.shared.config import settings
from src.shared.exceptions import UsageException


STOCHASTIC_SUBCOMMANDS = frozenset({"simulate", "cv"})

# Claves aceptadas en el archivo --config
CONFIG_FILE_KEYS = frozenset({
    "seed", "folds", "alpha", "beta", "noise", "kind", "out", "model",
    "fixed_point_log", "absolute_residuals", "system", "frame_level", "rows",
    "max_measurements", "solver",
})


class RunConfig(BaseModel):
    """Opciones de una ejecución del CLI, ya mezcladas y validadas."""

    subcommand: str
    inputs: List[str] = Field(default_factory=list)
    model_ids: List[str] = Field(default_factory=list)
    seed: Optional[int] = None
    folds: int = settings.DEFAULT_FOLDS
    alpha: float = settings.DEFAULT_ALPHA
    beta: float = settings.DEFAULT_BETA
    noise: float = settings.DEFAULT_NOISE
    max_measurements: int = settings.DEFAULT_MAX_MEASUREMENTS
    kind: str = "FS"
    out: Optional[str] = None
    fixed_point_log: bool = settings.FIXED_POINT_LOG
    absolute_residuals: bool = settings.ABSOLUTE_RESIDUALS
    system: Optional[str] = None
    frame_level: bool = False
    breakdown: bool = False
    solver: str = "closed_form"
    rows: Optional[int] = None

    @field_validator("kind")
    @classmethod
    def _kind_upper(cls, value: str) -> str:
        value = value.upper()
        if value not in ("FA", "FS"):
            raise ValueError("kind debe ser FA o FS")
        return value

    @field_validator("folds")
    @classmethod
    def _folds_positive(cls, value: int) -> int:
        if value < 2:
            raise ValueError("folds debe ser >= 2")
        return value

    @field_validator("noise")
    @classmethod
    def _noise_non_negative(cls, value: float) -> float:
        if value < 0:
            raise ValueError("noise debe ser >= 0")
        return value

    @model_validator(mode="after")
    def _seed_for_stochastic(self) -> "RunConfig":
        if self.subcommand in STOCHASTIC_SUBCOMMANDS and self.seed is None:
            raise ValueError(f"'{self.subcommand}' requiere --seed")
        return self


def _read_config_file(path: Path) -> Dict[str, Any]:
    if not path.is_file():
        raise UsageException(f"No existe el archivo de configuración: {path}")
    values = {key.strip().lower(): value for key, value in dotenv_values(path).items()}
    unknown = sorted(set(values) - CONFIG_FILE_KEYS)
    if unknown:
        raise UsageException(f"Claves desconocidas en {path}: {', '.join(unknown)}")
    if "model" in values:
        raw = values.pop("model") or ""
        values["model_ids"] = [item.strip() for item in raw.split(",") if item.strip()]
    return {key: value for key, value in values.items() if value is not None}


def build_run_config(
    subcommand: str,
    flags: Dict[str, Any],
    config_path: Optional[str] = None,
) -> RunConfig:
    """
    Mezcla flags, archivo de configuración y Settings en un RunConfig.

    Args:
        subcommand: Nombre del subcomando
        flags: Valores de argparse; None significa "no indicado"
        config_path: Archivo key=value opcional

    Raises:
        UsageException: Si la combinación no es válida
    """
    merged: Dict[str, Any] = {}
    if config_path:
        merged.update(_read_config_file(Path(config_path)))
    merged.update({key: value for key, value in flags.items() if value is not None})
    merged["subcommand"] = subcommand

    try:
        return RunConfig(**merged)
    except ValidationError as e:
        details = "; ".join(error["msg"] for error in e.errors())
        raise UsageException(f"Opciones inválidas: {details}") from e
