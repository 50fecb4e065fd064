"""Visual theme for rendered cards.

The default theme follows the card's accessibility constraints: a 14-point
generic sans-serif face with 125% interline spacing, a white background, and
level colors that all clear the WCAG AA 4.5:1 contrast threshold against the
white text printed on them (the lint module re-checks this for custom themes).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace

from .model import DEFAULT_LEVEL_COLORS, RiskLevel

__all__ = ["Theme", "DEFAULT_THEME", "load_theme"]

_HEX_RE = re.compile(r"^#[0-9a-fA-F]{6}$")


@dataclass(frozen=True)
class Theme:
    level_colors: dict[RiskLevel, str] = field(
        default_factory=lambda: dict(DEFAULT_LEVEL_COLORS)
    )
    text_color_on_level: str = "#FFFFFF"
    base_font_family: str = "sans-serif"
    base_font_size: float = 14.0  # points
    line_spacing: float = 1.25
    background: str = "#FFFFFF"
    page_width_mm: float = 210.0  # A5 landscape
    page_height_mm: float = 148.0

    def __post_init__(self) -> None:
        missing = [level.value for level in RiskLevel if level not in self.level_colors]
        if missing:
            raise ValueError(f"theme misses level colors for: {', '.join(missing)}")
        for key, color in self.level_colors.items():
            _require_hex(color, f"level color for {key.value}")
        _require_hex(self.text_color_on_level, "text color")
        _require_hex(self.background, "background color")


def _require_hex(color: str, what: str) -> None:
    if not isinstance(color, str) or not _HEX_RE.match(color):
        raise ValueError(f"{what} must be a #RRGGBB hex string, got {color!r}")


DEFAULT_THEME = Theme()

_SCALAR_KEYS = {
    "text_color_on_level": str,
    "base_font_family": str,
    "base_font_size": (int, float),
    "line_spacing": (int, float),
    "background": str,
    "page_width_mm": (int, float),
    "page_height_mm": (int, float),
}


def load_theme(path: str) -> Theme:
    """Read a theme overlay from a JSON file.

    Every key is optional and falls back to the default theme; level_colors
    may name any subset of the four levels. Unknown keys are rejected.
    """
    with open(path, "r", encoding="utf-8") as handle:
        tree = json.load(handle)
    if not isinstance(tree, dict):
        raise ValueError(f"{path}: theme file must hold a JSON object")

    allowed = set(_SCALAR_KEYS) | {"level_colors"}
    for key in tree:
        if key not in allowed:
            raise ValueError(f"{path}: unknown theme key '{key}'")

    overrides: dict = {}
    if "level_colors" in tree:
        raw = tree["level_colors"]
        if not isinstance(raw, dict):
            raise ValueError(f"{path}: level_colors must be an object")
        colors = dict(DEFAULT_LEVEL_COLORS)
        for name, color in raw.items():
            try:
                level = RiskLevel(name)
            except ValueError:
                raise ValueError(f"{path}: unknown risk level '{name}' in level_colors") from None
            if not isinstance(color, str):
                raise ValueError(f"{path}: level color for {name} must be a string")
            colors[level] = color
        overrides["level_colors"] = colors
    for key, expected in _SCALAR_KEYS.items():
        if key in tree:
            value = tree[key]
            if isinstance(value, bool) or not isinstance(value, expected):
                raise ValueError(f"{path}: theme key '{key}' has the wrong type")
            overrides[key] = float(value) if expected == (int, float) else value

    return replace(DEFAULT_THEME, **overrides)
