from __future__ import annotations

import math

import numpy as np
import pytest

from hankelkit.config import QuadratureConfig
from hankelkit.decay import DecayKind
from hankelkit.exceptions import QuadratureError, ValidationError
from hankelkit.expressions import Constant, Function, Polynomial
from hankelkit.measure import (
    Atom,
    DensityPiece,
    Hint,
    Measure,
    atom,
    delta0,
    geometric,
    hilbert,
    integrate_against,
    inverse_square,
    lebesgue,
    log_moment,
    log_moments,
    moment,
    moments,
    ones,
    sigma_to_mu_mass,
    slow,
    stieltjes,
    stieltjes_log_moment_exact,
    tail_mass,
    total_mass,
    transport_to_sigma,
)


def test_total_mass_examples(unit_lebesgue: Measure, linear_density: Measure, cfg: QuadratureConfig) -> None:
    assert total_mass(unit_lebesgue, cfg) == pytest.approx(1.0, rel=1e-14)
    assert total_mass(ones(), cfg) == 1.0
    assert total_mass(linear_density, cfg) == pytest.approx(0.5, rel=1e-14)


def test_moment_examples(unit_lebesgue: Measure, cfg: QuadratureConfig) -> None:
    assert moment(unit_lebesgue, 4, cfg) == pytest.approx(0.2, rel=1e-13)
    assert moment(ones(), 17, cfg) == 1.0


def test_moments_examples(
    unit_lebesgue: Measure, linear_density: Measure, half_atom: Measure, cfg: QuadratureConfig
) -> None:
    assert np.allclose(moments(unit_lebesgue, 3, cfg).values, [1.0, 0.5, 1.0 / 3.0], rtol=1e-13)
    assert moments(half_atom, 4, cfg).values.tolist() == [1.0, -0.5, 0.25, -0.125]
    assert np.allclose(moments(linear_density, 3, cfg).values, [0.5, 1.0 / 6.0, 1.0 / 12.0], rtol=1e-13)


def test_moments_carry_family_decay(cfg: QuadratureConfig) -> None:
    seq = moments(hilbert(), 4, cfg)
    assert seq.decay is not None
    assert seq.decay.kind is DecayKind.BIG_O_INVERSE
    assert seq.origin is not None
    assert seq.origin.family == "hilbert"


def test_lebesgue_moments_are_exact_to_high_order(unit_lebesgue: Measure, cfg: QuadratureConfig) -> None:
    values = moments(unit_lebesgue, 201, cfg).values
    expected = 1.0 / np.arange(1, 202)
    assert np.max(np.abs(values / expected - 1.0)) <= 1e-11


def test_slow_family_moments(cfg: QuadratureConfig) -> None:
    values = moments(slow(), 12, cfg).values
    expected = 1.0 / np.sqrt(np.arange(1, 13))
    assert np.allclose(values, expected, rtol=1e-9, atol=0)


def test_inverse_square_family_moments(cfg: QuadratureConfig) -> None:
    values = moments(inverse_square(), 8, cfg).values
    expected = 1.0 / np.arange(1, 9) ** 2
    assert np.allclose(values, expected, rtol=1e-9, atol=0)


def test_moment_zero_matches_total_mass(test_measures: list[Measure], cfg: QuadratureConfig) -> None:
    for m in [*test_measures, slow(), inverse_square()]:
        mass = total_mass(m, cfg)
        assert abs(moment(m, 0, cfg) - mass) <= 2 * cfg.relative_tolerance * abs(mass)


def test_stieltjes_moments_match_closed_form(cfg: QuadratureConfig) -> None:
    expected = math.sqrt(math.pi) * math.exp(4.0)
    assert moment(stieltjes(0.0), 3, cfg) == pytest.approx(expected, rel=1e-10)
    assert expected == pytest.approx(96.7699, abs=1e-4)


def test_stieltjes_moments_do_not_depend_on_theta(cfg: QuadratureConfig) -> None:
    for n in range(11):
        exact = stieltjes_log_moment_exact(n)
        for theta in (-1.0, -0.5, 0.5, 1.0):
            _, log_abs = log_moment(stieltjes(theta), n, cfg)
            assert abs(math.expm1(log_abs - exact)) <= 1e-6


def test_stieltjes_density_agrees_with_moment_rule(cfg: QuadratureConfig) -> None:
    m = stieltjes(0.5)
    direct = float(np.asarray(m.pieces[0].density(np.array([1.0])))[0])
    assert direct == pytest.approx(1.0)
    for n in (0, 1, 2):
        by_density = float(integrate_against(m, lambda x, k=n: x**k, cfg))
        assert by_density == pytest.approx(moment(m, n, cfg), rel=1e-9)


def test_log_moments_of_large_stieltjes_orders(cfg: QuadratureConfig) -> None:
    signs, logs = log_moments(stieltjes(1.0), 60, cfg)
    assert np.all(signs == 1.0)
    assert logs[59] == pytest.approx(stieltjes_log_moment_exact(59), rel=1e-12)
    with pytest.raises(QuadratureError):
        moment(stieltjes(1.0), 59, cfg)


def test_log_moment_of_zero_moment(cfg: QuadratureConfig) -> None:
    sign, log_abs = log_moment(delta0(), 3, cfg)
    assert sign == 0.0
    assert log_abs == -math.inf


def test_tail_mass_examples(unit_lebesgue: Measure, linear_density: Measure, cfg: QuadratureConfig) -> None:
    assert tail_mass(unit_lebesgue, "right", 0.1, cfg) == pytest.approx(0.1, rel=1e-12)
    assert tail_mass(linear_density, "right", 0.1, cfg) == pytest.approx(0.005, rel=1e-10)
    assert tail_mass(ones(), "right", 0.3, cfg) == 0.0
    assert tail_mass(unit_lebesgue, "left", 0.1, cfg) == 0.0


def test_tail_mass_requires_unit_support(cfg: QuadratureConfig) -> None:
    with pytest.raises(ValidationError):
        tail_mass(lebesgue(0.0, 2.0), "right", 0.1, cfg)
    with pytest.raises(ValidationError):
        tail_mass(ones(), "right", 1.5, cfg)


def test_measure_validation() -> None:
    with pytest.raises(ValidationError):
        Atom(0.0, -1.0)
    with pytest.raises(ValidationError):
        DensityPiece(0.0, 1.0, Polynomial([-1.0]))
    with pytest.raises(ValidationError):
        Measure.from_parts([(2.0, 1.0)], support=(-1.0, 1.0))
    with pytest.raises(ValidationError):
        Measure(pieces=(DensityPiece(0.0, 2.0, Constant(1.0)),), support=(0.0, 1.0))
    with pytest.raises(ValidationError):
        DensityPiece(0.0, 1.0, Constant(1.0), Hint.LOG_SCALE)
    with pytest.raises(ValidationError):
        DensityPiece(0.0, 1.0, Constant(1.0), Hint.SINGULAR_LEFT, Constant(1.0))


def test_measure_support_and_radius() -> None:
    m = Measure.from_parts([(-0.75, 1.0)], [DensityPiece(0.0, 0.5, Constant(2.0))])
    assert m.declared_support == (-0.75, 0.5)
    assert m.radius == 0.75
    assert m.is_compact
    assert not stieltjes().is_compact


def test_without_endpoint_atoms() -> None:
    m = Measure.from_parts([(1.0, 2.0), (-1.0, 1.0), (0.5, 1.0)])
    stripped = m.without_endpoint_atoms()
    assert [a.location for a in stripped.atoms] == [0.5]
    assert m.atom_mass_at(1.0) == 2.0


def test_family_parameter_validation() -> None:
    with pytest.raises(ValidationError):
        geometric(1.0)
    with pytest.raises(ValidationError):
        stieltjes(1.5)
    with pytest.raises(ValidationError):
        lebesgue(1.0, 0.0)


def test_family_decay_descriptors() -> None:
    assert lebesgue(-0.5, 0.5).decay.to_symbol() == "o(a^n)@0.5"  # type: ignore[union-attr]
    assert lebesgue(0.0, 1.0).decay.kind is DecayKind.BIG_O_INVERSE  # type: ignore[union-attr]
    assert atom(0.25).decay.to_symbol() == "O(a^n)@0.25"  # type: ignore[union-attr]
    assert atom(-1.0).decay.kind is DecayKind.BOUNDED_NOT_DECAYING  # type: ignore[union-attr]
    assert geometric().params == {"rate": 0.5}


def test_transport_atom_at_origin(cfg: QuadratureConfig) -> None:
    sigma = transport_to_sigma(delta0(), cfg)
    assert sigma.atoms == (Atom(0.5, 1.0),)


def test_transport_near_endpoint(cfg: QuadratureConfig) -> None:
    mu = -1.0 + 1e-9
    sigma = transport_to_sigma(Measure.from_parts([(mu, 1.0)]), cfg)
    assert sigma.atoms[0].location == pytest.approx((1.0 + mu) / (2.0 * (1.0 - mu)))
    assert sigma.atoms[0].location < 1e-9


def test_transport_uniform_density(centered_lebesgue: Measure, cfg: QuadratureConfig) -> None:
    sigma = transport_to_sigma(centered_lebesgue, cfg)
    lo, hi = sigma.declared_support
    assert lo == pytest.approx(1.0 / 6.0)
    assert hi == pytest.approx(1.5)
    assert np.allclose(sigma.pieces[0].density(np.array([0.2, 1.0, 1.4])), 1.0)
    assert abs(sigma_to_mu_mass(sigma, cfg) - total_mass(centered_lebesgue, cfg)) <= 1e-12


def test_transport_rejects_endpoint_support(unit_lebesgue: Measure, cfg: QuadratureConfig) -> None:
    with pytest.raises(ValidationError):
        transport_to_sigma(unit_lebesgue, cfg)


def test_halfline_density_without_decay_diverges(cfg: QuadratureConfig) -> None:
    m = Measure(pieces=(DensityPiece(0.0, math.inf, Constant(1.0)),))
    with pytest.raises(QuadratureError):
        total_mass(m, cfg)


def test_halfline_density_moments(cfg: QuadratureConfig) -> None:
    m = Measure(pieces=(DensityPiece(0.0, math.inf, Function(lambda x: np.exp(-x))),))
    assert np.allclose(moments(m, 5, cfg).values, [1.0, 1.0, 2.0, 6.0, 24.0], rtol=1e-10)


def test_moments_decrease_on_unit_support(test_measures: list[Measure], cfg: QuadratureConfig) -> None:
    unit = [m for m in test_measures if m.declared_support[0] >= 0.0 and m.declared_support[1] <= 1.0]
    assert len(unit) == 2
    for m in unit:
        q = moments(m, 64, cfg).values
        assert np.all(q[1:] <= q[:-1] + 1e-14)


def test_moments_are_bounded_by_radius_powers(test_measures: list[Measure], cfg: QuadratureConfig) -> None:
    for m in test_measures:
        q = moments(m, 64, cfg).values
        bound = m.radius ** np.arange(64) * total_mass(m, cfg)
        assert np.all(np.abs(q) <= bound * (1.0 + 1e-12) + 1e-300)


def test_right_tail_mass_grows_with_eps(test_measures: list[Measure], cfg: QuadratureConfig) -> None:
    grid = [0.001, 0.01, 0.1, 0.3, 0.5, 0.9]
    for m in test_measures:
        masses = [tail_mass(m, "right", eps, cfg) for eps in grid]
        assert all(b >= a - 1e-15 for a, b in zip(masses, masses[1:]))
