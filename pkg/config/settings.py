"""
Configuration settings for the Wiener/eccentric complexity workbench.
Loads environment variables and provides centralized configuration.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Project paths
PROJECT_ROOT = Path(__file__).parent.parent
DATA_DIR = PROJECT_ROOT / "data"
LOGS_DIR = PROJECT_ROOT / "logs"
REPORTS_DIR = PROJECT_ROOT / "reports"

# Ensure directories exist
for directory in [LOGS_DIR, REPORTS_DIR]:
    directory.mkdir(parents=True, exist_ok=True)


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() in ("1", "true", "yes")


class Settings:
    """Application settings loaded from environment variables."""

    # Parallelism
    WORKERS: int = int(os.getenv("WORKERS", str(os.cpu_count() or 1)))
    CHUNK_SIZE: int = int(os.getenv("CHUNK_SIZE", "5000"))

    # Reproducibility
    SEED: int = int(os.getenv("SEED", "2020"))

    # Capacities
    MAX_ORDER: int = int(os.getenv("MAX_ORDER", "4096"))
    CANONICAL_MAX_ORDER: int = int(os.getenv("CANONICAL_MAX_ORDER", "16"))
    MAX_WITNESSES: int = int(os.getenv("MAX_WITNESSES", "10000"))

    # Order-11 universes
    EXTENDED: bool = _flag("EXTENDED", "false")

    # Logging and progress
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO").upper()
    LOG_TO_FILE: bool = _flag("LOG_TO_FILE", "true")
    SHOW_PROGRESS: bool = _flag("SHOW_PROGRESS", "false")


settings = Settings()
