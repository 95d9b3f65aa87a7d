"""
Runtime configuration.

Values come from config/settings.yaml (section `rainbowtri`), then from the
environment (a .env file is honoured through python-dotenv).
"""

import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, model_validator

from rainbowtri.protocol import (
    DEFAULT_COLORED_CAP,
    DEFAULT_MAX_FILE_VERTICES,
    DEFAULT_ORIENTED_CAP,
    DEFAULT_ORIENTED_OPT_IN_CAP,
    ENV_EXHAUSTIVE_CAP,
    ENV_LOG_LEVEL,
    ENV_SETTINGS_PATH,
    ENV_WORKERS,
)

_logger = logging.getLogger(__name__)

DEFAULT_SETTINGS_PATH = Path(__file__).resolve().parent.parent / "config" / "settings.yaml"


class ExhaustiveLimits(BaseModel):
    colored_cap: int = Field(DEFAULT_COLORED_CAP, ge=0)
    oriented_cap: int = Field(DEFAULT_ORIENTED_CAP, ge=0)
    oriented_opt_in_cap: int = Field(DEFAULT_ORIENTED_OPT_IN_CAP, ge=0)

    @model_validator(mode="after")
    def _opt_in_not_below_default(self):
        if self.oriented_opt_in_cap < self.oriented_cap:
            raise ValueError("oriented_opt_in_cap must be >= oriented_cap")
        return self


class RandomDefaults(BaseModel):
    samples: int = Field(10_000, ge=0)
    seed: int = 0


class HarnessSettings(BaseModel):
    # 0 means one process per CPU
    workers: int = Field(0, ge=0)
    max_counterexamples: int = Field(25, ge=1)

    def worker_count(self) -> int:
        return self.workers or os.cpu_count() or 1


class GraphFileSettings(BaseModel):
    max_vertices: int = Field(DEFAULT_MAX_FILE_VERTICES, ge=1)


class Settings(BaseModel):
    log_level: str = "INFO"
    exhaustive: ExhaustiveLimits = Field(default_factory=ExhaustiveLimits)
    random: RandomDefaults = Field(default_factory=RandomDefaults)
    harness: HarnessSettings = Field(default_factory=HarnessSettings)
    graph_files: GraphFileSettings = Field(default_factory=GraphFileSettings)

    def oriented_cap(self, allow_large: bool = False) -> int:
        if allow_large:
            return self.exhaustive.oriented_opt_in_cap
        return self.exhaustive.oriented_cap


def _read_yaml(path: Path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except FileNotFoundError:
        _logger.warning(f"Settings file not found at {path}; using built-in defaults")
        return {}
    except yaml.YAMLError as e:
        _logger.warning(f"Could not parse settings file {path}: {e}; using built-in defaults")
        return {}
    return data.get("rainbowtri", {}) or {}


def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError:
        _logger.warning(f"Ignoring non-integer {name}={raw!r}")
        return None


def load_settings(path: Optional[Path] = None) -> Settings:
    """Build a Settings object from YAML plus environment overrides."""
    load_dotenv()
    if path is None:
        path = Path(os.getenv(ENV_SETTINGS_PATH) or DEFAULT_SETTINGS_PATH)
    raw = _read_yaml(Path(path))
    settings = Settings.model_validate(raw)

    cap = _env_int(ENV_EXHAUSTIVE_CAP)
    if cap is not None:
        limits = settings.exhaustive
        raised = ExhaustiveLimits(
            colored_cap=max(limits.colored_cap, cap),
            oriented_cap=max(limits.oriented_cap, cap),
            oriented_opt_in_cap=max(limits.oriented_opt_in_cap, cap),
        )
        settings = settings.model_copy(update={"exhaustive": raised})
        _logger.info(f"Exhaustive caps raised to at least {cap} via {ENV_EXHAUSTIVE_CAP}")

    workers = _env_int(ENV_WORKERS)
    if workers is not None and workers >= 0:
        harness = settings.harness.model_copy(update={"workers": workers})
        settings = settings.model_copy(update={"harness": harness})

    level = os.getenv(ENV_LOG_LEVEL)
    if level:
        settings = settings.model_copy(update={"log_level": level.upper()})
    return settings


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()
