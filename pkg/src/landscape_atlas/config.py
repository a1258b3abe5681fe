# -*- coding: utf-8 -*-
"""
src.landscape_atlas.config.py - Landscape-Atlas
Created by NCagle
2025-02-05
      _
   __(.)<
~~~⋱___)~~~

Runtime settings.

Defaults live on the Settings dataclass, can be overridden by a JSON file
(data/config.json) and then by keyword overrides coming from the CLI.
Settings are frozen once loaded.
"""

import json
import logging
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional, Union

from landscape_atlas.utils.constants import DEFAULT_MAX_N
from landscape_atlas.utils.errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path("data/config.json")


@dataclass(frozen=True)
class Settings:
    """
    Arguments:
        max_n (int): Largest dimension allowed for full enumeration
        tie_epsilon (float): Fitness values are rounded to multiples of this
            before ranking; 0 compares values exactly
        seed (int): Seed for every random draw (simulation oracle, sampled checks)
        simulation_runs (int): Monte-Carlo runs per climber in the oracle check
        simulation_classes (int): Number of random classes the oracle samples
        workers (int): Processes used by classification; 1 runs in-process
        progress (bool): Show tqdm progress bars
        log_level (str): Root log level name
        atlas_dir (str): Default directory for atlas files
    """
    max_n: int = DEFAULT_MAX_N
    tie_epsilon: float = 0.0
    seed: int = 20250203
    simulation_runs: int = 1_000_000
    simulation_classes: int = 20
    workers: int = 1
    progress: bool = True
    log_level: str = "WARNING"
    atlas_dir: str = "data/atlas"


    def __post_init__(self):
        if self.max_n < 1:
            raise ConfigError(f"max_n must be >= 1, got {self.max_n}")
        if self.tie_epsilon < 0:
            raise ConfigError(f"tie_epsilon must be >= 0, got {self.tie_epsilon}")
        if self.simulation_runs < 1 or self.simulation_classes < 0:
            raise ConfigError("simulation_runs must be >= 1 and simulation_classes >= 0")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if logging.getLevelName(str(self.log_level).upper()) not in (
            logging.DEBUG, logging.INFO, logging.WARNING, logging.ERROR, logging.CRITICAL
        ):
            raise ConfigError(f"Unknown log level: {self.log_level}")


    def atlas_path(self, n: int) -> Path:
        """Default atlas file for dimension n."""
        return Path(self.atlas_dir) / f"atlas_n{n}.jsonl"


def _check_keys(values: Dict[str, Any], source: str) -> None:
    known = {f.name for f in fields(Settings)}
    unknown = sorted(set(values) - known)
    if unknown:
        raise ConfigError(f"Unknown setting(s) in {source}: {', '.join(unknown)}")


def load_settings(
    path: Optional[Union[os.PathLike, str]] = None,
    **overrides: Any
) -> Settings:
    """
    Build Settings from defaults, an optional JSON file and overrides.

    Arguments:
        path (Optional[PathLike | str]): JSON settings file. When None the
            default data/config.json is used if it exists.
        **overrides: Values taking precedence over the file; None values
            are ignored so unset CLI flags fall through

    Returns:
        Settings: Frozen settings

    Raises:
        ConfigError: Unreadable file, unknown key or invalid value
    """
    values: Dict[str, Any] = {}

    if path is None and DEFAULT_CONFIG_PATH.exists():
        path = DEFAULT_CONFIG_PATH
    if path is not None:
        try:
            with open(path, "r", encoding="utf-8") as f:
                text = f.read()
            file_values = json.loads(text) if text.strip() else {}
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"Cannot read settings file {path}: {e}") from e
        if not isinstance(file_values, dict):
            raise ConfigError(f"Settings file {path} must hold a JSON object")
        _check_keys(file_values, str(path))
        values.update(file_values)
        logger.debug("Loaded %d setting(s) from %s", len(file_values), path)

    overrides = {key: value for key, value in overrides.items() if value is not None}
    _check_keys(overrides, "overrides")
    values.update(overrides)

    try:
        return replace(Settings(), **values)
    except TypeError as e:
        raise ConfigError(str(e)) from e
