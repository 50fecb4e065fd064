"""Theme defaults and theme-file loading."""

import json

import pytest

from impactcard.model import DEFAULT_LEVEL_COLORS, RiskLevel
from impactcard.theme import DEFAULT_THEME, Theme, load_theme


def write_theme(tmp_path, payload) -> str:
    path = tmp_path / "theme.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def test_default_uses_model_palette():
    assert DEFAULT_THEME.level_colors == DEFAULT_LEVEL_COLORS
    assert DEFAULT_THEME.text_color_on_level == "#FFFFFF"
    assert DEFAULT_THEME.page_width_mm == 210.0
    assert DEFAULT_THEME.page_height_mm == 148.0


def test_theme_requires_all_four_levels():
    with pytest.raises(ValueError, match="Unacceptable"):
        Theme(level_colors={RiskLevel.MINIMAL: "#000000"})


def test_theme_rejects_bad_hex():
    with pytest.raises(ValueError, match="RRGGBB"):
        Theme(background="white")


def test_load_overrides_scalars(tmp_path):
    path = write_theme(tmp_path, {"base_font_size": 12, "line_spacing": 1.4})
    theme = load_theme(path)
    assert theme.base_font_size == 12.0
    assert theme.line_spacing == 1.4
    # untouched fields keep their defaults
    assert theme.level_colors == DEFAULT_THEME.level_colors


def test_load_merges_partial_level_colors(tmp_path):
    path = write_theme(tmp_path, {"level_colors": {"High": "#803300"}})
    theme = load_theme(path)
    assert theme.level_colors[RiskLevel.HIGH] == "#803300"
    assert theme.level_colors[RiskLevel.MINIMAL] == DEFAULT_THEME.level_colors[RiskLevel.MINIMAL]


def test_load_rejects_unknown_keys(tmp_path):
    path = write_theme(tmp_path, {"font": "serif"})
    with pytest.raises(ValueError, match="font"):
        load_theme(path)


def test_load_rejects_unknown_level(tmp_path):
    path = write_theme(tmp_path, {"level_colors": {"Extreme": "#000000"}})
    with pytest.raises(ValueError, match="Extreme"):
        load_theme(path)


def test_load_rejects_bool_for_number(tmp_path):
    path = write_theme(tmp_path, {"base_font_size": True})
    with pytest.raises(ValueError, match="base_font_size"):
        load_theme(path)


def test_load_rejects_non_object(tmp_path):
    path = write_theme(tmp_path, ["not", "a", "theme"])
    with pytest.raises(ValueError):
        load_theme(path)


def test_themes_are_frozen():
    with pytest.raises(AttributeError):
        DEFAULT_THEME.base_font_size = 9.0
