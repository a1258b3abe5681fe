# -*- coding: utf-8 -*-
"""
tests.test_utils.py - Landscape-Atlas
Created by NCagle
2025-02-21
      _
   __(.)<
~~~⋱___)~~~

╔═══════════════════╗
║ Utilities Testing ║
╚═══════════════════╝
Tests for rendering, number formatting, settings and errors.

✅ Rendering
    - Node roles and colors, improving and neutral edges
    - Output parses as dot
    - Invalid styles and graph names rejected
✅ Formatting
    - Fixed-place decimals with half-even rounding
    - Percentages and exact strings
✅ Settings
    - Defaults, JSON file, overrides, validation
✅ Errors
    - Exit codes
"""
import json
from decimal import Decimal
from fractions import Fraction

import pytest

from landscape_atlas.config import Settings, load_settings
from landscape_atlas.models.base import NodeRole, RankVector
from landscape_atlas.utils import constants as c
from landscape_atlas.utils.errors import (
    AtlasFormatError,
    CapacityError,
    ConfigError,
    DomainError,
    NotFoundError,
    VerificationError,
)
from landscape_atlas.utils.formatting import (
    format_decimal,
    format_exact,
    format_percent,
    parse_fraction,
    to_decimal,
)
from landscape_atlas.utils.render import RenderStyle, landscape_to_dot, parse_dot


"""
╔═══════════╗
║ Rendering ║
╚═══════════╝
"""
def test_trapped_square_dot(trapped_square):
    graph = parse_dot(landscape_to_dot(trapped_square, title="trapped"))
    assert graph.name == "trapped"
    assert set(graph.nodes) == {"00", "01", "10", "11"}
    assert graph.nodes["00"]["role"] == "strict_suboptimum"
    assert graph.nodes["00"]["fillcolor"] == c.STRICT_SUBOPTIMUM_COLOR
    assert graph.nodes["00"]["label"] == "00\\nB"
    assert graph.nodes["11"]["fillcolor"] == c.GLOBAL_OPTIMUM_COLOR
    assert set(graph.directed_edges) == {("01", "00"), ("01", "11"), ("10", "11"), ("10", "00")}
    assert graph.undirected_edges == []


def test_constant_square_dot(constant_square):
    graph = parse_dot(landscape_to_dot(constant_square))
    assert graph.directed_edges == []
    assert len(graph.undirected_edges) == 4
    assert {attrs["fillcolor"] for attrs in graph.nodes.values()} == {c.GLOBAL_OPTIMUM_COLOR}
    assert all(attrs["style"] == "dashed" for _, _, attrs in graph.edges)


def test_weak_suboptima_are_orange():
    graph = parse_dot(landscape_to_dot(RankVector(3, c.PLATEAU_TRAP_3D)))
    orange = {name for name, attrs in graph.nodes.items() if attrs["fillcolor"] == c.WEAK_SUBOPTIMUM_COLOR}
    assert orange == {"011", "111"}
    assert graph.undirected_edges == [("011", "111")]


def test_rank_shading():
    style = RenderStyle()
    assert style.shade(1, 3) == "#08306B"
    assert style.shade(3, 3) == "#DEEBF7"
    assert style.shade(1, 1) == "#08306B"
    assert style.fill(NodeRole.OTHER, 2, 4) == style.shade(2, 4)


def test_render_style_validation():
    with pytest.raises(DomainError):
        RenderStyle(role_colors={NodeRole.GLOBAL_OPTIMUM: "#FFFFFF", NodeRole.WEAK_SUBOPTIMUM: "#FFFFFF"})
    with pytest.raises(DomainError):
        RenderStyle(role_colors={NodeRole.STRICT_SUBOPTIMUM: "#FF0000"})


def test_custom_style_is_used(trapped_square):
    style = RenderStyle(neutral_style="dotted", improving_color="#123456")
    graph = parse_dot(landscape_to_dot(trapped_square, style))
    assert {attrs["color"] for _, _, attrs in graph.edges} == {"#123456"}


@pytest.mark.parametrize("title", ["has space", "1abc", ""])
def test_invalid_graph_name(constant_square, title):
    with pytest.raises(DomainError):
        landscape_to_dot(constant_square, title=title)


@pytest.mark.parametrize("text", [
    "graph g { a -- b ; }",
    "digraph g { a -> ; }",
    "digraph g { [x=1] ; }",
    "not dot at all",
])
def test_parse_dot_rejects(text):
    with pytest.raises(DomainError):
        parse_dot(text)


"""
╔════════════╗
║ Formatting ║
╚════════════╝
"""
@pytest.mark.parametrize("value, expected", [
    (Fraction(13, 3), "4.333"),
    (Fraction(61, 16), "3.812"),
    (Fraction(16, 3), "5.333"),
    (Fraction(35, 8), "4.375"),
    (3, "3.000"),
    (None, "-"),
])
def test_format_decimal(value, expected):
    assert format_decimal(value) == expected


def test_to_decimal_places():
    assert to_decimal(Fraction(13, 3), 6) == Decimal("4.333333")
    assert to_decimal(Fraction(1, 8), 2) == Decimal("0.12")


def test_format_percent():
    assert format_percent(840, 11991) == "7.01"
    assert format_percent(1233, 11991) == "10.28"
    assert format_percent(0, 0) == "0.00"


def test_exact_strings():
    assert format_exact(Fraction(13, 3)) == "13/3"
    assert format_exact(5) == "5"
    assert format_exact(None) == "-"
    assert parse_fraction("13/3") == Fraction(13, 3)
    assert parse_fraction("-") is None


"""
╔══════════╗
║ Settings ║
╚══════════╝
"""
def test_settings_defaults():
    settings = Settings()
    assert settings.max_n == 3
    assert settings.tie_epsilon == 0.0
    assert settings.workers == 1
    assert str(settings.atlas_path(2)).endswith("atlas_n2.jsonl")


@pytest.mark.parametrize("changes", [
    {"max_n": 0},
    {"tie_epsilon": -1.0},
    {"workers": 0},
    {"simulation_runs": 0},
    {"log_level": "LOUD"},
])
def test_settings_validation(changes):
    with pytest.raises(ConfigError):
        Settings(**changes)


def test_load_settings_file_and_overrides(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"seed": 7, "workers": 2}), encoding="utf-8")
    settings = load_settings(path, workers=3, tie_epsilon=None)
    assert settings.seed == 7
    assert settings.workers == 3
    assert settings.tie_epsilon == 0.0


def test_load_settings_without_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert load_settings() == Settings()
    assert load_settings(max_n=2).max_n == 2


@pytest.mark.parametrize("content", ['{"colour": "blue"}', "[1, 2]", "{not json"])
def test_load_settings_rejects_bad_files(tmp_path, content):
    path = tmp_path / "config.json"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ConfigError):
        load_settings(path)


def test_load_settings_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_settings(tmp_path / "absent.json")


def test_load_settings_unknown_override(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    with pytest.raises(ConfigError):
        load_settings(colour="blue")


"""
╔════════╗
║ Errors ║
╚════════╝
"""
def test_exit_codes():
    assert DomainError("x").exit_code == 2
    assert CapacityError(4, 3).exit_code == 3
    assert AtlasFormatError("x").exit_code == 4
    assert VerificationError(["a", "b"]).exit_code == 1
    assert VerificationError(["a", "b"]).failures == ["a", "b"]
    assert isinstance(DomainError("x"), ValueError)


def test_not_found_message_is_unquoted():
    assert str(NotFoundError("No class 3 for n=2")) == "No class 3 for n=2"
    assert "n=4" in str(CapacityError(4, 3))
