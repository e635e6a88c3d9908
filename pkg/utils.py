"""Utility helpers for the parabolic cone-structure engine."""
from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from dotenv import load_dotenv

__all__ = [
    "ConfigError",
    "EngineConfig",
    "configure_logging",
    "load_engine_config",
    "to_jsonable",
    "dump_json",
]

LOGGER = logging.getLogger(__name__)

DEFAULT_PREFIX = "CONE_ENGINE"
DEFAULT_FIXTURES = Path(__file__).resolve().parent / "fixtures" / "tables.json"


class ConfigError(ValueError):
    """Raised when an environment setting cannot be interpreted."""


@dataclass(frozen=True)
class EngineConfig:
    oracle_cap: int
    fixtures_path: Path
    log_level: str
    jacobi_samples: int
    seed: int


def configure_logging(level: int = logging.INFO) -> None:
    """Configure root logger if not already set."""
    if not logging.getLogger().handlers:
        logging.basicConfig(
            level=level,
            format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        )
    else:
        logging.getLogger().setLevel(level)


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"Environment variable {name} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ConfigError(f"Environment variable {name} must be positive, got {value}")
    return value


def load_engine_config(prefix: str = DEFAULT_PREFIX) -> EngineConfig:
    """Load engine settings from environment variables using a prefix."""
    load_dotenv()
    fixtures = os.getenv(f"{prefix}_FIXTURES")
    log_level = os.getenv(f"{prefix}_LOG_LEVEL", "INFO").upper()
    if log_level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
        raise ConfigError(f"Environment variable {prefix}_LOG_LEVEL has unknown level {log_level!r}")
    config = EngineConfig(
        oracle_cap=_env_int(f"{prefix}_ORACLE_CAP", 200_000),
        fixtures_path=Path(fixtures) if fixtures else DEFAULT_FIXTURES,
        log_level=log_level,
        jacobi_samples=_env_int(f"{prefix}_JACOBI_SAMPLES", 10_000),
        seed=_env_int(f"{prefix}_SEED", 20240611),
    )
    LOGGER.debug("Loaded engine config: %s", config)
    return config


def to_jsonable(value: Any) -> Any:
    """Convert tuples, sets, Fractions and numpy scalars into JSON-friendly values."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, (set, frozenset)):
        return [to_jsonable(item) for item in sorted(value)]
    if isinstance(value, Path):
        return str(value)
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        # numpy scalar
        return value.item()
    return value


def dump_json(document: Any, indent: Optional[int] = 2) -> str:
    """Serialize with stable key order so regenerated reports are byte-identical."""
    return json.dumps(to_jsonable(document), indent=indent, ensure_ascii=False)
