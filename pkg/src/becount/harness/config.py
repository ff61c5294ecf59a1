"""Pipeline configuration and its ``key = value`` file format."""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from ..color.pcentered import ColorConfig
from ..errors import ParseError

COMBINE_METHODS = ("inclusion-exclusion", "hybrid")
ENGINES = ("pipeline", "baseline")

_BOOL = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}
_COLOR_KEYS = {f.name: f.type for f in fields(ColorConfig)}
CONFIG_KEYS = tuple(_COLOR_KEYS) + ("combine", "seed")


@dataclass(frozen=True)
class PipelineConfig:
    color: ColorConfig = field(default_factory=ColorConfig)
    combine: str = "inclusion-exclusion"
    engine: str = "pipeline"
    seed: int = 0

    def __post_init__(self):
        if self.combine not in COMBINE_METHODS:
            raise ValueError(f"combine must be one of {COMBINE_METHODS}")
        if self.engine not in ENGINES:
            raise ValueError(f"engine must be one of {ENGINES}")

    def with_options(self, **options) -> "PipelineConfig":
        """Copy with individual options replaced; color options by name."""
        color = {k: v for k, v in options.items() if k in _COLOR_KEYS}
        rest = {k: v for k, v in options.items() if k not in _COLOR_KEYS}
        return replace(self, color=replace(self.color, **color), **rest)

    def to_text(self) -> str:
        lines = [f"{k} = {_format(getattr(self.color, k))}" for k in _COLOR_KEYS]
        lines.append(f"combine = {self.combine}")
        lines.append(f"seed = {self.seed}")
        return "\n".join(lines) + "\n"


def _format(value) -> str:
    return str(value).lower() if isinstance(value, bool) else str(value)


def _convert(key: str, raw: str, lineno: int):
    kind = _COLOR_KEYS.get(key, "int" if key == "seed" else "str")
    try:
        if kind in ("bool", bool):
            return _BOOL[raw.lower()]
        if kind in ("int", int):
            return int(raw)
    except (KeyError, ValueError):
        raise ParseError(f"line {lineno}: bad value {raw!r} for {key}") from None
    return raw


def parse_config(text: str, base: PipelineConfig | None = None) -> PipelineConfig:
    """Parse ``key = value`` lines ('#' starts a comment) over ``base``."""
    options = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        if not sep or not key or not value:
            raise ParseError(f"line {lineno}: expected 'key = value', got {raw!r}")
        if key not in CONFIG_KEYS:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
        if key in options:
            raise ParseError(f"line {lineno}: {key} given twice")
        options[key] = _convert(key, value, lineno)
    try:
        return (base or PipelineConfig()).with_options(**options)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_config(path, base: PipelineConfig | None = None) -> PipelineConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"), base)
