import logging
from logging import config as logging_config

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from core.logger import LOGGING


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    log_level: str = Field(default="WARNING", description="Level of the omgraph logger")

    # Sign-vector limits
    max_ground_size: int = Field(
        default=64, description="Largest ground set accepted (one machine word per sign part)"
    )

    # Closure budgets
    covector_cap: int = Field(default=200_000, description="Maximum number of covectors")
    closure_time_limit_seconds: float = Field(
        default=60.0, description="Wall-clock limit for one composition closure"
    )
    lattice_diagnostic_cap: int = Field(
        default=400, description="Largest lattice the meet/join diagnostic will scan"
    )

    # Hull enumeration policy
    exhaustive_cap: int = Field(
        default=16, description="Enumerate every subset of C* up to this many cocircuits"
    )
    sample_count: int = Field(
        default=1_000, description="Sampled larger subsets beyond the exhaustive cap"
    )
    seed: int = Field(default=0, description="Seed for every random choice")

    # Execution
    jobs: int = Field(default=1, description="Worker processes for independent checks")
    console_width: int = Field(default=120, description="Fixed width of rendered tables")


settings = Settings()

# Применяем настройки логирования
logging_config.dictConfig(LOGGING)

# Создаем логгер для использования по всему проекту
logger = logging.getLogger("omgraph")
logger.setLevel(settings.log_level.upper())
