# -*- coding: utf-8 -*-
"""
tests.conftest.py - Landscape-Atlas
Created by NCagle
2025-02-03
      _
   __(.)<
~~~⋱___)~~~

Pytest configuration and shared fixtures.

This module contains all shared fixtures and configuration for the test suite.
It automatically gets loaded by pytest without needing to import it explicitly.

Each fixture has a specific scope:
    - session: Created once for the entire test run
    - function: Created fresh for each test function

Analysis Tests:
    - Hypercube neighborhoods and the automorphism group
    - Rank functions, partitions and exact counts
    - Canonical forms and classification
    - Property reports and exact climber performance

Atlas Tests:
    - Building and lookup
    - Statistics
    - Import/export and validation
"""
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List

import pytest

from landscape_atlas.atlas.manager import AtlasManager
from landscape_atlas.config import Settings
from landscape_atlas.models.base import RankVector


DATA_DIR = Path(__file__).parent / "data"


"""
╔═══════════════════╗
║ Settings Fixtures ║
╚═══════════════════╝
"""
@pytest.fixture(scope="session")
def settings() -> Settings:
    """
    Settings for tests: no progress bars, few simulation runs

    Returns:
        Settings: Frozen settings
    """
    return Settings(progress=False, simulation_runs=20_000, simulation_classes=2)


"""
╔════════════════╗
║ Atlas Fixtures ║
╚════════════════╝
"""
@pytest.fixture(scope="session")
def atlas_1d(settings: Settings) -> AtlasManager:
    manager = AtlasManager(settings)
    manager.build(1)
    return manager


@pytest.fixture(scope="session")
def atlas_2d(settings: Settings) -> AtlasManager:
    """
    Manager holding the complete two-dimensional inventory

    Returns:
        AtlasManager: 14 classes
    """
    manager = AtlasManager(settings)
    manager.build(2)
    return manager


@pytest.fixture(scope="session")
def atlas_3d(settings: Settings) -> AtlasManager:
    """
    Manager holding the complete three-dimensional inventory.
    Only requested by tests marked slow.
    """
    manager = AtlasManager(settings)
    manager.build(3)
    return manager


@pytest.fixture(scope="session")
def atlas_2d_file(atlas_2d: AtlasManager, tmp_path_factory) -> Path:
    """Saved copy of the two-dimensional atlas."""
    path = tmp_path_factory.mktemp("atlas") / "atlas_n2.jsonl"
    atlas_2d.save(path)
    return path


"""
╔═════════════════════════╗
║ Reference Data Fixtures ║
╚═════════════════════════╝
"""
def _fraction_row(row: List[Any]) -> tuple:
    return tuple(None if v is None else Fraction(v) for v in row)


@pytest.fixture(scope="session")
def reference_2d() -> Dict[str, Any]:
    """
    Published two-dimensional tables, exact values as strings

    Returns:
        Dict[str, Any]: "properties" rows of ints; "best" and "first" rows
            of Fractions (None where a climber never fails)
    """
    with open(DATA_DIR / "reference_2d.json", "r", encoding="utf-8") as f:
        raw = json.load(f)
    return {
        "orbit_sizes": raw["orbit_sizes"],
        "properties": [tuple(row) for row in raw["properties"]],
        "best": [_fraction_row(row) for row in raw["best"]],
        "first": [_fraction_row(row) for row in raw["first"]],
    }


@pytest.fixture
def trapped_square() -> RankVector:
    """Two-dimensional landscape with a strict suboptimum at 00."""
    return RankVector(2, (2, 3, 4, 1))


@pytest.fixture
def constant_square() -> RankVector:
    return RankVector(2, (1, 1, 1, 1))
