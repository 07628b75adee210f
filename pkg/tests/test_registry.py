from __future__ import annotations

import pytest

from hankelkit import registry
from hankelkit.exceptions import ConfigurationError, ValidationError
from hankelkit.measure import Measure, lebesgue01


def test_default_families_and_suites() -> None:
    assert list(registry.list_families()) == [
        "atom",
        "compact",
        "delta0",
        "geometric",
        "hilbert",
        "inverse_square",
        "lebesgue",
        "lebesgue01",
        "ones",
        "slow",
        "stieltjes",
    ]
    assert list(registry.list_suites()) == ["closure", "form", "intertwine", "laguerre", "transport", "unitarity"]


def test_build_family_with_params() -> None:
    m = registry.build_family(" Lebesgue ", a=-0.5, b=0.5)
    assert m.family == "lebesgue"
    assert m.declared_support == (-0.5, 0.5)
    assert registry.build_family("stieltjes", theta=0.5).params == {"theta": 0.5}


def test_unknown_names_raise() -> None:
    with pytest.raises(ConfigurationError):
        registry.get_family("gaussian")
    with pytest.raises(ConfigurationError):
        registry.get_suite("fourier")
    with pytest.raises(ConfigurationError):
        registry.get_family("   ")


def test_bad_family_params_raise() -> None:
    with pytest.raises(ConfigurationError):
        registry.build_family("hilbert", rate=0.5)


@pytest.mark.parametrize(
    ("name", "params"),
    [
        ("lebesgue", {"a": "x"}),
        ("atom", {"x": "abc"}),
        ("atom", {"w": True}),
        ("geometric", {"rate": None}),
        ("stieltjes", {"theta": float("nan")}),
    ],
)
def test_non_numeric_family_params_are_validation_errors(name: str, params: dict[str, object]) -> None:
    with pytest.raises(ValidationError):
        registry.build_family(name, **params)


def test_factory_type_errors_are_not_relabelled(monkeypatch: pytest.MonkeyPatch) -> None:
    registry.ensure_defaults()
    monkeypatch.setattr(registry, "_family_factories", dict(registry._family_factories))

    def broken(x: float = 1.0) -> Measure:
        message = "internal failure"
        raise TypeError(message)

    registry.register_family("broken", broken)
    with pytest.raises(TypeError, match="internal failure"):
        registry.build_family("broken", x=2.0)


def test_register_custom_family_and_suite(monkeypatch: pytest.MonkeyPatch) -> None:
    registry.ensure_defaults()
    monkeypatch.setattr(registry, "_family_factories", dict(registry._family_factories))
    monkeypatch.setattr(registry, "_suite_runners", dict(registry._suite_runners))

    def shifted() -> Measure:
        return Measure.from_parts([(0.25, 1.0)])

    registry.register_family("Shifted", shifted)
    registry.register_suite("noop", lambda settings=None: None)
    assert registry.build_family("shifted").atoms[0].location == 0.25
    assert "noop" in registry.list_suites()
    assert registry.get_family("lebesgue01") is not None
    assert registry.build_family("lebesgue01").family == lebesgue01().family
