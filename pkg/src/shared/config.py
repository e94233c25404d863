from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Configuración de la aplicación.
    Lee variables de entorno (prefijo DECWATT_) y .env, con tipado y valores por defecto.
    """

    # --- Configuración general ---
    SERVICE_NAME: str = "decwatt"
    SERVICE_VERSION: str = "1.0.0"

    # Nivel de log; DECWATT_LOG=INFO / DEBUG para más detalle
    LOG: str = "WARNING"

    # --- Evaluación ---
    DEFAULT_FOLDS: int = 10

    # --- Protocolo de medición (intervalo de confianza) ---
    DEFAULT_ALPHA: float = 0.99
    DEFAULT_BETA: float = 0.02
    DEFAULT_NOISE: float = 0.0
    DEFAULT_MAX_MEASUREMENTS: int = 200

    # --- Conteo de features ---
    FIXED_POINT_LOG: bool = False

    # --- Ajuste MARS ---
    ABSOLUTE_RESIDUALS: bool = False
    MARS_MAX_TERMS: int = 21
    MARS_GCV_PENALTY: float = 3.0
    MARS_MAX_KNOTS: int = 100

    model_config = SettingsConfigDict(
        env_prefix="DECWATT_",
        env_file=".env",
        case_sensitive=True,
        # Variables extra en el .env se ignoran
        extra='ignore'
    )


# Instancia global de configuración
settings = Settings()
