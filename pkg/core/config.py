# ==========================================================
# core/config.py — runtime settings (defaults + optional YAML)
# ==========================================================

import os
from functools import lru_cache
from pathlib import Path
from typing import Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from core.errors import ConfigError

ROOT_DIR = Path(__file__).resolve().parent.parent
DEFAULT_CONFIG_FILE = ROOT_DIR / "config.yaml"
CONFIG_ENV_VAR = "TPV_CONFIG"


class Settings(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    # ==========================================================
    # 🔹 Minor enumeration bounds
    # ==========================================================
    order: int = Field(5, ge=1)
    window: int = Field(16, ge=1)

    # ==========================================================
    # 🔹 Quotient audits
    # ==========================================================
    nmax: int = Field(12, ge=2)
    lmax: int = Field(4, ge=0)
    trunc: int = Field(24, ge=1)

    # ==========================================================
    # 🔹 Enclosures and thresholds
    # ==========================================================
    precision_bits: int = Field(128, ge=64)
    tol: str = "1e-4"
    q_infinity_degree: int = Field(40, ge=8)
    q_infinity_rerun_degree: int = Field(60, ge=8)

    # ==========================================================
    # 🔹 Runtime
    # ==========================================================
    seed: int = 0
    workers: int = Field(1, ge=1)
    progress: bool = False
    log_level: str = "INFO"


def load_settings(path: Optional[str] = None) -> Settings:
    """Load settings from YAML; missing keys fall back to defaults."""
    candidate = path or os.environ.get(CONFIG_ENV_VAR)
    if candidate:
        config_path = Path(candidate)
        if not config_path.exists():
            raise ConfigError(f"Config file not found: {config_path}")
    elif DEFAULT_CONFIG_FILE.exists():
        config_path = DEFAULT_CONFIG_FILE
    else:
        return Settings()

    try:
        raw = yaml.safe_load(config_path.read_text(encoding="utf-8")) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML in {config_path}: {e}") from e
    if not isinstance(raw, dict):
        raise ConfigError(f"Config root must be a mapping, got {type(raw).__name__}")
    try:
        return Settings(**raw)
    except ValidationError as e:
        raise ConfigError(f"Invalid settings in {config_path}: {e}") from e


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()
