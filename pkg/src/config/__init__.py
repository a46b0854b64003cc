#!/usr/bin/env python3
"""
Configuration module for flagorbit.
"""

import os
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

try:
    from core.errors import ConfigurationError
except ImportError:
    from ..core.errors import ConfigurationError

# Bumped whenever an algorithm change would alter cached intervals
ENGINE_VERSION = "flagorbit-1.0.0"

CACHE_DIR_ENV = "FLAGORBIT_CACHE_DIR"

# Configuration constants and default settings
DEFAULT_CONFIG = {
    "max_group_order": 3628800,  # 10!
    "max_roots": 10000,
    "format": "table",
    "cache_dir": None,
    "poincare_truncate": 12,
    "workers": 1,
}


class OutputFormat(str, Enum):
    """Output formats understood by the CLI."""
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


class CliConfig(BaseModel):
    """Validated runtime configuration."""

    model_config = ConfigDict(frozen=True)

    max_group_order: int = Field(default=DEFAULT_CONFIG["max_group_order"], ge=1)
    max_roots: int = Field(default=DEFAULT_CONFIG["max_roots"], ge=1)
    cache_dir: Optional[Path] = None
    format: OutputFormat = OutputFormat.TABLE
    poincare_truncate: int = Field(default=DEFAULT_CONFIG["poincare_truncate"], ge=1)
    workers: int = Field(default=DEFAULT_CONFIG["workers"], ge=1)

    @classmethod
    def from_env(cls, **overrides: Any) -> "CliConfig":
        """
        Build a config from defaults, then the environment, then explicit overrides.

        Overrides whose value is None are ignored so CLI flags left unset
        fall through to the lower layers.
        """
        data: Dict[str, Any] = dict(DEFAULT_CONFIG)

        env_cache = os.environ.get(CACHE_DIR_ENV)
        if env_cache:
            data["cache_dir"] = env_cache

        data.update({key: value for key, value in overrides.items() if value is not None})

        try:
            return cls(**data)
        except ValidationError as e:
            raise ConfigurationError(str(e)) from e


__all__ = [
    "DEFAULT_CONFIG",
    "ENGINE_VERSION",
    "CACHE_DIR_ENV",
    "OutputFormat",
    "CliConfig",
]
