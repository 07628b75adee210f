"""Configuration primitives.

All configuration objects are frozen dataclasses validated on construction.
`Settings.load` layers defaults, a JSON file, environment variables and
explicit overrides, in that order.
"""

from __future__ import annotations

import json
import math
import os
from collections.abc import Mapping
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Any

from .exceptions import ConfigurationError, ValidationError

MAX_SECTION_ORDER = 4096


@dataclass(frozen=True)
class QuadratureConfig:
    """Composite Gauss–Legendre quadrature settings.

    `endpoint_refinement` is the geometric ratio of panels accumulating at
    endpoints flagged singular.
    """

    base_order: int = 16
    relative_tolerance: float = 1e-12
    max_subdivisions: int = 4000
    endpoint_refinement: float = 0.5

    def __post_init__(self) -> None:
        if isinstance(self.base_order, bool) or not isinstance(self.base_order, int) or not 2 <= self.base_order <= 128:
            raise ValidationError.argument_out_of_range("base_order", self.base_order, "an integer in [2, 128]")
        if not _is_real(self.relative_tolerance) or not 0.0 < self.relative_tolerance < 1.0:
            raise ValidationError.argument_out_of_range("relative_tolerance", self.relative_tolerance, "a real in (0, 1)")
        if isinstance(self.max_subdivisions, bool) or not isinstance(self.max_subdivisions, int) or self.max_subdivisions < 1:
            raise ValidationError.argument_out_of_range("max_subdivisions", self.max_subdivisions, "an integer >= 1")
        if not _is_real(self.endpoint_refinement) or not 0.0 < self.endpoint_refinement < 1.0:
            raise ValidationError.argument_out_of_range(
                "endpoint_refinement", self.endpoint_refinement, "a real in (0, 1)"
            )


@dataclass(frozen=True)
class AnalysisConfig:
    """Thresholds used by positivity checks and heuristic classification."""

    psd_tolerance: float = 1e-10
    closable_fraction: float = 1e-3
    slope_margin: float = 0.15
    compact_ratio: float = 1.5
    max_order: int = MAX_SECTION_ORDER

    def __post_init__(self) -> None:
        for name in ("psd_tolerance", "closable_fraction", "slope_margin"):
            value = getattr(self, name)
            if not _is_real(value) or value <= 0:
                raise ValidationError.argument_out_of_range(name, value, "a positive real")
        if not _is_real(self.compact_ratio) or self.compact_ratio <= 1.0:
            raise ValidationError.argument_out_of_range("compact_ratio", self.compact_ratio, "a real > 1")
        if not isinstance(self.max_order, int) or not 1 <= self.max_order <= MAX_SECTION_ORDER:
            raise ValidationError.argument_out_of_range("max_order", self.max_order, f"an integer in [1, {MAX_SECTION_ORDER}]")


_ENV_RULES: dict[str, tuple[str, str, type]] = {
    "HANKELKIT_TOL": ("quadrature", "relative_tolerance", float),
    "HANKELKIT_BASE_ORDER": ("quadrature", "base_order", int),
    "HANKELKIT_MAX_SUBDIVISIONS": ("quadrature", "max_subdivisions", int),
    "HANKELKIT_PSD_TOL": ("analysis", "psd_tolerance", float),
    "HANKELKIT_SEED": ("", "seed", int),
}


@dataclass(frozen=True)
class Settings:
    """Resolved settings for a toolkit session."""

    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    seed: int = 0

    @classmethod
    def load(
        cls,
        path: str | Path | None = None,
        *,
        env: Mapping[str, str] | None = None,
        **overrides: Any,
    ) -> Settings:
        """Build settings from defaults, a JSON file, the environment and overrides.

        Overrides use the flat names `relative_tolerance`, `psd_tolerance`,
        `seed` and so on; `None` values are ignored.
        """

        layers: dict[str, dict[str, Any]] = {"quadrature": {}, "analysis": {}, "": {}}
        if path is not None:
            _merge_file(layers, Path(path))
        _merge_env(layers, os.environ if env is None else env)
        for key, value in overrides.items():
            if value is None:
                continue
            layers[_section_of(key)][key] = value
        try:
            return cls(
                quadrature=QuadratureConfig(**layers["quadrature"]),
                analysis=AnalysisConfig(**layers["analysis"]),
                seed=int(layers[""].get("seed", 0)),
            )
        except TypeError as exc:
            raise ConfigurationError(str(exc)) from exc

    def to_dict(self) -> dict[str, Any]:
        return {"quadrature": asdict(self.quadrature), "analysis": asdict(self.analysis), "seed": self.seed}

    def with_quadrature(self, **changes: Any) -> Settings:
        return replace(self, quadrature=replace(self.quadrature, **changes))


def _merge_file(layers: dict[str, dict[str, Any]], path: Path) -> None:
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigurationError.config_unreadable(str(path)) from exc
    except json.JSONDecodeError as exc:
        raise ValidationError.invalid_json(str(path)) from exc
    if not isinstance(payload, dict):
        raise ValidationError.schema_mismatch("config root must be an object")
    for key, value in payload.items():
        if key == "seed":
            layers[""]["seed"] = value
        elif key in ("quadrature", "analysis") and isinstance(value, dict):
            for inner in value:
                _section_of(inner)
            layers[key].update(value)
        elif key == "schema":
            continue
        else:
            raise ConfigurationError.unknown_config_key(key)


def _merge_env(layers: dict[str, dict[str, Any]], env: Mapping[str, str]) -> None:
    for name, (section, key, cast) in _ENV_RULES.items():
        raw = env.get(name)
        if raw is None or not raw.strip():
            continue
        try:
            layers[section][key] = cast(raw.strip())
        except ValueError as exc:
            raise ValidationError.argument_out_of_range(name, raw, cast.__name__) from exc


def _section_of(key: str) -> str:
    if key in _QUADRATURE_KEYS:
        return "quadrature"
    if key in _ANALYSIS_KEYS:
        return "analysis"
    if key == "seed":
        return ""
    raise ConfigurationError.unknown_config_key(key)


def _is_real(value: object) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool) and math.isfinite(value)


_QUADRATURE_KEYS = frozenset(f.name for f in fields(QuadratureConfig))
_ANALYSIS_KEYS = frozenset(f.name for f in fields(AnalysisConfig))

__all__ = ["MAX_SECTION_ORDER", "AnalysisConfig", "QuadratureConfig", "Settings"]
