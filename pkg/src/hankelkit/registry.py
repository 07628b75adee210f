"""Registry for named measure families and verification suites."""

from __future__ import annotations

import inspect
from collections.abc import Callable, Iterable
from typing import TYPE_CHECKING, Any

from .exceptions import ConfigurationError, ValidationError
from .validation import is_finite_real

if TYPE_CHECKING:
    from .measure import Measure
    from .verification import SuiteResult

FamilyFactory = Callable[..., "Measure"]
SuiteRunner = Callable[..., "SuiteResult"]

_family_factories: dict[str, FamilyFactory] = {}
_suite_runners: dict[str, SuiteRunner] = {}
_defaults_loaded = False


def register_family(name: str, factory: FamilyFactory) -> None:
    """Register a measure family factory."""

    _family_factories[_normalize_name(name)] = factory


def register_suite(name: str, runner: SuiteRunner) -> None:
    """Register a verification suite runner."""

    _suite_runners[_normalize_name(name)] = runner


def get_family(name: str) -> FamilyFactory:
    """Return the factory for the given family name."""

    ensure_defaults()
    key = _normalize_name(name)
    try:
        return _family_factories[key]
    except KeyError as exc:
        raise ConfigurationError.family_not_found(name) from exc


def get_suite(name: str) -> SuiteRunner:
    """Return the runner for the given suite name."""

    ensure_defaults()
    key = _normalize_name(name)
    try:
        return _suite_runners[key]
    except KeyError as exc:
        raise ConfigurationError.suite_not_found(name) from exc


def build_family(name: str, **params: Any) -> Measure:
    """Instantiate a named family.

    Parameters the factory does not take raise `ConfigurationError`; family
    parameters are finite reals, anything else raises `ValidationError`.
    """

    factory = get_family(name)
    try:
        inspect.signature(factory).bind(**params)
    except TypeError as exc:
        raise ConfigurationError.invalid_family_params(name, sorted(params)) from exc
    for key, value in params.items():
        if not is_finite_real(value):
            raise ValidationError.schema_mismatch(f"family parameter '{key}' must be a finite real, got {value!r}")
    return factory(**params)


def list_families() -> Iterable[str]:
    """List registered family names."""

    ensure_defaults()
    return sorted(_family_factories)


def list_suites() -> Iterable[str]:
    """List registered suite names."""

    ensure_defaults()
    return sorted(_suite_runners)


def ensure_defaults() -> None:
    """Load built-in families and suites into the registry."""

    global _defaults_loaded
    if _defaults_loaded:
        return
    _defaults_loaded = True
    from ._defaults import register_defaults

    register_defaults()


def _normalize_name(name: str) -> str:
    value = name.strip().lower()
    if not value:
        raise ConfigurationError.invalid_extension_name()
    return value


__all__ = [
    "FamilyFactory",
    "SuiteRunner",
    "build_family",
    "ensure_defaults",
    "get_family",
    "get_suite",
    "list_families",
    "list_suites",
    "register_family",
    "register_suite",
]
