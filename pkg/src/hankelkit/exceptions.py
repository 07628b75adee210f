"""Toolkit exception definitions."""

from __future__ import annotations


class HankelKitError(Exception):
    """Base error for the toolkit."""


class ConfigurationError(HankelKitError):
    """Raised when configuration is invalid or incomplete."""

    def __init__(self, message: str | None = None) -> None:
        super().__init__(message or "Configuration is invalid or incomplete.")

    @classmethod
    def family_not_found(cls, name: str) -> ConfigurationError:
        return cls(f"Measure family '{name}' is not registered.")

    @classmethod
    def suite_not_found(cls, name: str) -> ConfigurationError:
        return cls(f"Verification suite '{name}' is not registered.")

    @classmethod
    def invalid_family_params(cls, name: str, params: list[str]) -> ConfigurationError:
        return cls(f"Measure family '{name}' does not accept parameters {params}.")

    @classmethod
    def invalid_extension_name(cls) -> ConfigurationError:
        return cls("Extension name must be non-empty.")

    @classmethod
    def missing_optional_dependency(cls, extra: str) -> ConfigurationError:
        return cls(f"{extra} support requires extras: pip install 'hankelkit[{extra}]'")

    @classmethod
    def config_unreadable(cls, path: str) -> ConfigurationError:
        return cls(f"Config file could not be read: {path}")

    @classmethod
    def unknown_config_key(cls, name: str) -> ConfigurationError:
        return cls(f"Unknown config key: {name}")


class ValidationError(ValueError, HankelKitError):
    """Raised when user input fails validation."""

    def __init__(self, message: str) -> None:
        super().__init__(message)

    @classmethod
    def negative_weight(cls, location: float, weight: float) -> ValidationError:
        return cls(f"Atom at {location} has negative weight {weight}.")

    @classmethod
    def negative_density(cls, a: float, b: float, point: float) -> ValidationError:
        return cls(f"Density on [{a}, {b}] is negative or non-finite at {point}.")

    @classmethod
    def atom_outside_support(cls, location: float) -> ValidationError:
        return cls(f"Atom at {location} lies outside the declared support.")

    @classmethod
    def piece_outside_support(cls, a: float, b: float) -> ValidationError:
        return cls(f"Density piece [{a}, {b}] lies outside the declared support.")

    @classmethod
    def invalid_interval(cls, a: float, b: float) -> ValidationError:
        return cls(f"Invalid interval [{a}, {b}].")

    @classmethod
    def argument_out_of_range(cls, name: str, value: object, expected: str) -> ValidationError:
        return cls(f"Argument '{name}'={value} is out of range; expected {expected}.")

    @classmethod
    def insufficient_moments(cls, required: int, available: int) -> ValidationError:
        return cls(f"Insufficient moments: {required} required, {available} available.")

    @classmethod
    def non_finite_entries(cls, what: str) -> ValidationError:
        return cls(f"{what} contains NaN or infinite entries.")

    @classmethod
    def support_touches_endpoint(cls, detail: str) -> ValidationError:
        return cls(f"Support must lie strictly inside (-1, 1): {detail}")

    @classmethod
    def support_not_in_unit_interval(cls) -> ValidationError:
        return cls("Declared support must lie in [-1, 1].")

    @classmethod
    def unsupported_expression(cls, text: str, reason: str) -> ValidationError:
        return cls(f"Unsupported expression '{text}': {reason}")

    @classmethod
    def schema_mismatch(cls, detail: str) -> ValidationError:
        return cls(f"Schema error: {detail}")

    @classmethod
    def invalid_json(cls, source: str) -> ValidationError:
        return cls(f"Invalid JSON in {source}.")

    @classmethod
    def grid_not_increasing(cls) -> ValidationError:
        return cls("Grid nodes must be strictly increasing.")

    @classmethod
    def outside_grid(cls, point: float) -> ValidationError:
        return cls(f"Point {point} lies outside the grid.")

    @classmethod
    def grid_outside_domain(cls, domain: str) -> ValidationError:
        return cls(f"Grid nodes lie outside the {domain} domain.")

    @classmethod
    def degree_too_large(cls, degree: int, limit: int) -> ValidationError:
        return cls(f"Degree {degree} exceeds the supported maximum {limit}.")

    @classmethod
    def shape_mismatch(cls, detail: str) -> ValidationError:
        return cls(f"Shape mismatch: {detail}")

    @classmethod
    def not_positive_semidefinite(cls, min_eigenvalue: float) -> ValidationError:
        return cls(f"Section is not positive semidefinite (minimum eigenvalue {min_eigenvalue:.3e}).")

    @classmethod
    def broken_implication(cls, stronger: str, weaker: str) -> ValidationError:
        return cls(f"Report claims {stronger} without {weaker}.")


class NumericalError(HankelKitError):
    """Raised when a numerical procedure fails."""

    def __init__(self, message: str | None = None) -> None:
        super().__init__(message or "Numerical operation failed.")

    @classmethod
    def eigensolver_failed(cls) -> NumericalError:
        return cls("Symmetric eigensolver failed to converge.")

    @classmethod
    def sigma_condition_violated(cls) -> NumericalError:
        return cls("Transported measure violates ∫(λ+1)^-2 dΣ < ∞.")


class QuadratureError(NumericalError):
    """Raised when quadrature fails to converge or detects divergence."""

    def __init__(self, message: str | None = None, last_estimates: tuple[float, float] | None = None) -> None:
        super().__init__(message or "Quadrature failed.")
        self.last_estimates = last_estimates

    @classmethod
    def non_convergence(cls, previous: float, current: float, subdivisions: int) -> QuadratureError:
        return cls(
            f"Quadrature did not converge after {subdivisions} subdivisions "
            f"(last estimates {previous!r}, {current!r}).",
            last_estimates=(previous, current),
        )

    @classmethod
    def divergent(cls, what: str) -> QuadratureError:
        return cls(f"Integral diverges: {what}")

    @classmethod
    def moment_overflow(cls, n: int) -> QuadratureError:
        return cls(f"Moment q_{n} overflows double precision; request log-space moments instead.")


class VerificationError(HankelKitError):
    """Raised when a verification suite breaches its tolerance."""

    def __init__(self, message: str | None = None, worst_case: object | None = None) -> None:
        super().__init__(message or "Verification failed.")
        self.worst_case = worst_case

    @classmethod
    def tolerance_breached(cls, suite: str, deviation: float, tolerance: float, worst_case: object) -> VerificationError:
        return cls(
            f"Suite '{suite}' deviation {deviation:.3e} exceeds tolerance {tolerance:.1e}: {worst_case}",
            worst_case=worst_case,
        )


__all__ = [
    "ConfigurationError",
    "HankelKitError",
    "NumericalError",
    "QuadratureError",
    "ValidationError",
    "VerificationError",
]
