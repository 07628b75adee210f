from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from hankelkit.config import QuadratureConfig
from hankelkit.decay import Decay, DecayKind
from hankelkit.exceptions import NumericalError, ValidationError
from hankelkit.measure import Measure, atom, moments, ones
from hankelkit.moments import (
    HankelSection,
    MomentSequence,
    eigenvalues,
    hankel_section,
    is_psd,
    stieltjes_check,
    widom_tail_check,
)


def test_hankel_section_examples() -> None:
    assert hankel_section([1.0, 0.0, 0.0], 2).entries.tolist() == [[1.0, 0.0], [0.0, 0.0]]
    assert hankel_section([1.0, 1.0, 1.0], 2).entries.tolist() == [[1.0, 1.0], [1.0, 1.0]]
    shifted = hankel_section([1.0, -0.5, 0.25, -0.125], 2, shift=1)
    assert shifted.entries.tolist() == [[-0.5, 0.25], [0.25, -0.125]]
    assert shifted.shift == 1


def test_hankel_section_is_symmetric_and_read_only() -> None:
    section = hankel_section(1.0 / np.arange(1, 12), 6)
    assert np.array_equal(section.entries, section.entries.T)
    with pytest.raises(ValueError):
        section.entries[0, 0] = 2.0


def test_hankel_section_needs_enough_moments() -> None:
    with pytest.raises(ValidationError) as excinfo:
        hankel_section([1.0, 0.5, 0.25], 3)
    assert "5 required" in str(excinfo.value)
    with pytest.raises(ValidationError):
        hankel_section([1.0, 0.5, 0.25], 2, shift=1)
    with pytest.raises(ValidationError):
        hankel_section([1.0, 0.5, 0.25], 2, shift=2)  # type: ignore[arg-type]


def test_section_rejects_non_finite_entries() -> None:
    with pytest.raises(ValidationError):
        hankel_section([1.0, float("nan"), 1.0], 2)
    with pytest.raises(ValidationError):
        HankelSection.from_matrix([[1.0, np.inf], [np.inf, 1.0]])


def test_is_psd_examples() -> None:
    passed, lam_min = is_psd(np.array([[1.0, 1.0], [1.0, 1.0]]))
    assert passed
    assert abs(lam_min) <= 1e-15

    passed, lam_min = is_psd(np.array([[1.0, 0.0], [0.0, -1.0]]))
    assert not passed
    assert lam_min == pytest.approx(-1.0)


def test_hilbert_section_smallest_eigenvalue() -> None:
    section = hankel_section(1.0 / np.arange(1, 6), 3)
    passed, lam_min = is_psd(section)
    assert passed
    assert lam_min == pytest.approx(2.6873e-3, rel=1e-4)
    assert np.all(np.diff(eigenvalues(section)) >= 0)


def test_is_psd_rejects_negative_tolerance() -> None:
    with pytest.raises(ValidationError):
        is_psd(np.eye(2), tol=-1.0)


def test_eigenvalues_wrap_solver_failures(monkeypatch: pytest.MonkeyPatch) -> None:
    import hankelkit.moments.hankel as hankel_module

    def broken(*_: object, **__: object) -> None:
        raise np.linalg.LinAlgError("no convergence")

    monkeypatch.setattr(hankel_module, "eigvalsh", broken)
    with pytest.raises(NumericalError):
        eigenvalues(np.eye(3))


def test_stieltjes_check_examples(
    unit_lebesgue: Measure, half_atom: Measure, cfg: QuadratureConfig
) -> None:
    assert stieltjes_check(moments(unit_lebesgue, 8, cfg), 4)
    assert not stieltjes_check(moments(half_atom, 4, cfg), 2)
    assert stieltjes_check([1.0, 0.0, 0.0, 0.0, 0.0, 0.0], 3)


def test_stieltjes_check_needs_shifted_section() -> None:
    with pytest.raises(ValidationError):
        stieltjes_check([1.0, 0.5, 0.25], 2)


def test_moment_sequence_validation() -> None:
    with pytest.raises(ValidationError):
        MomentSequence.from_values([])
    with pytest.raises(ValidationError):
        MomentSequence.from_values([1.0, np.inf])
    with pytest.raises(ValidationError):
        MomentSequence.from_values([[1.0, 2.0]])


def test_moment_sequence_helpers() -> None:
    seq = MomentSequence.from_formula(lambda n: 1.0 / (n + 1.0), 6, Decay(DecayKind.BIG_O_INVERSE))
    assert len(seq) == 6
    assert seq.has_decay
    assert seq.head(3).values.tolist() == pytest.approx([1.0, 0.5, 1.0 / 3.0])
    assert seq.head(3).decay == seq.decay
    with pytest.raises(ValidationError):
        seq.require(7)
    assert MomentSequence.from_values([0.0, 0.0]).is_zero()
    assert MomentSequence.from_values([1.0], decay="o(a^n)@0.5").decay == Decay.geometric(0.5, little_o=True)


def test_moment_sequence_values_are_copied() -> None:
    source = np.array([1.0, 0.5])
    seq = MomentSequence.from_values(source)
    source[0] = 7.0
    assert seq.values[0] == 1.0
    with pytest.raises(ValueError):
        seq.values[0] = 3.0


def test_tends_to_zero_rejects_endpoint_atoms(cfg: QuadratureConfig) -> None:
    m = ones()
    with pytest.raises(ValidationError):
        MomentSequence(values=moments(m, 4, cfg).values, decay=Decay(DecayKind.TENDS_TO_ZERO), origin=m)


def test_tail_ratios_for_lebesgue(unit_lebesgue: Measure, cfg: QuadratureConfig) -> None:
    evidence = widom_tail_check(unit_lebesgue, cfg=cfg)
    assert evidence.eps_grid.tolist() == [0.1, 0.01, 0.001]
    assert np.all(np.abs(evidence.right_ratios - 1.0) <= 1e-10)
    assert np.all(evidence.left_ratios == 0.0)
    assert evidence.bounded_evidence == pytest.approx(1.0, abs=1e-10)
    assert evidence.compact_evidence == pytest.approx(1.0, abs=1e-9)
    assert not evidence.has_endpoint_atoms


def test_tail_ratios_for_linear_density(linear_density: Measure, cfg: QuadratureConfig) -> None:
    evidence = widom_tail_check(linear_density, [0.001, 0.1, 0.01], cfg)
    assert evidence.eps_grid.tolist() == [0.1, 0.01, 0.001]
    assert np.allclose(evidence.right_ratios, evidence.eps_grid / 2.0, rtol=1e-9)
    assert evidence.compact_evidence == pytest.approx(0.01, rel=1e-8)


def test_tail_check_reports_endpoint_atoms(cfg: QuadratureConfig) -> None:
    evidence = widom_tail_check(atom(1.0, 2.0), cfg=cfg)
    assert np.all(evidence.right_ratios == 0.0)
    assert evidence.endpoint_masses == (0.0, 2.0)
    assert evidence.has_endpoint_atoms


def test_tail_check_rejects_bad_grid(unit_lebesgue: Measure) -> None:
    with pytest.raises(ValidationError):
        widom_tail_check(unit_lebesgue, [])
    with pytest.raises(ValidationError):
        widom_tail_check(unit_lebesgue, [0.5, 1.2])


@pytest.mark.parametrize("order", [8, 32, 128])
def test_measure_sections_are_positive_semidefinite(
    test_measures: list[Measure], cfg: QuadratureConfig, order: int
) -> None:
    for m in test_measures:
        section = hankel_section(moments(m, 2 * order - 1, cfg), order)
        passed, lam_min = is_psd(section, tol=1e-10)
        assert passed, (m, lam_min)


def test_section_norm_is_bounded_by_moment_sum(test_measures: list[Measure], cfg: QuadratureConfig) -> None:
    for m in test_measures:
        q = moments(m, 63, cfg).values
        for order in (4, 16, 32):
            norm = float(np.max(np.abs(eigenvalues(hankel_section(q, order)))))
            assert norm <= np.sum(np.abs(q[: 2 * order - 1])) * (1.0 + 1e-12)


_ATOMS = st.lists(
    st.tuples(st.floats(min_value=-1.0, max_value=1.0), st.floats(min_value=1e-3, max_value=1.0)),
    min_size=1,
    max_size=5,
)


@seed(11)
@settings(max_examples=60, deadline=None)
@given(_ATOMS, st.integers(min_value=1, max_value=8))
def test_atomic_measure_sections_are_psd(atoms: list[tuple[float, float]], order: int) -> None:
    q = moments(Measure.from_parts(atoms), 2 * order - 1).values
    passed, lam_min = is_psd(hankel_section(q, order), tol=1e-10)
    assert passed, lam_min


@st.composite
def _order_and_values(draw: st.DrawFn) -> tuple[int, list[float]]:
    order = draw(st.integers(min_value=1, max_value=12))
    size = 2 * order - 1
    values = draw(st.lists(st.floats(min_value=-1e6, max_value=1e6), min_size=size, max_size=size))
    return order, values


@seed(5)
@settings(max_examples=60, deadline=None)
@given(_order_and_values())
def test_sections_are_constant_along_anti_diagonals(case: tuple[int, list[float]]) -> None:
    order, values = case
    entries = hankel_section(values, order).entries
    for i in range(order):
        for j in range(order):
            assert entries[i, j] == values[i + j]
