"""Runtime configuration and environment loading helpers."""
from functools import lru_cache
from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict

_RESOURCES_DIR = Path(__file__).resolve().parents[1] / "resources"


class Settings(BaseSettings):
    """Central settings loaded from ``EDDS_*`` environment variables."""

    max_n: int = 24
    enumeration_limit: int = 7
    exhaustive_max_n: int = 6
    jobs: int = 1
    targets_file: str = str(_RESOURCES_DIR / "targets.yaml")
    log_level: str = "INFO"
    log_dir: str = "logs"
    log_max_bytes: int = 5 * 1024 * 1024  # 5 MB
    log_backup_count: int = 5

    model_config = SettingsConfigDict(
        env_prefix="EDDS_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the cached settings instance."""

    return Settings()


__all__ = ["Settings", "get_settings"]
