"""
Configuration module for the River PUT engine
Loads environment variables and provides centralized config
"""
import sys
from typing import Optional

from loguru import logger
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FILE: Optional[str] = None

    # Brute-force oracle
    UNIVERSE_LIMIT: int = 1_000_000

    # Benchmark harness
    BENCH_POLY_TIMEOUT: float = 5.0
    BENCH_BRUTE_TIMEOUT: float = 60.0
    BENCH_MAX_ATTEMPTS: int = 50_000
    BENCH_MAX_TIMEOUTS: int = 3
    BENCH_JOBS: int = 1

    # Ray Configuration
    RAY_ADDRESS: Optional[str] = None  # None means local mode

    # Election generator
    DEFAULT_PHI: float = 1.0

    class Config:
        env_file = ".env"
        case_sensitive = True


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get application settings"""
    return settings


def configure_logging(level: Optional[str] = None) -> None:
    """
    Route loguru output to stderr (and LOG_FILE when configured)

    Args:
        level: Override for settings.LOG_LEVEL
    """
    logger.remove()
    logger.add(sys.stderr, level=level or settings.LOG_LEVEL)
    if settings.LOG_FILE:
        logger.add(settings.LOG_FILE, level=level or settings.LOG_LEVEL, rotation="50 MB")
