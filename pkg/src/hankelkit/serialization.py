"""JSON codecs for the `hankel/v1` file format.

Documents are UTF-8 JSON objects with a top-level `"schema": "hankel/v1"`.
Non-finite floats are written as the strings `"inf"`, `"-inf"` and `"nan"`
so that the output stays strict JSON. Keys are sorted, which makes results
byte-identical across reruns apart from the manifest timestamp.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Any

import numpy as np

from .config import Settings
from .decay import Decay
from .exceptions import ConfigurationError, ValidationError
from .expressions import parse_expression
from .measure import DensityPiece, Hint, Measure
from .moments import ClassificationReport, MomentSequence, TailEvidence
from .operators import CoeffVector, IntertwiningReport
from .registry import build_family
from .spectral import SpectralProfile
from .verification import SuiteResult

SCHEMA = "hankel/v1"
PACKAGE = "hankelkit"


@dataclass(frozen=True)
class RunManifest:
    command: str
    inputs: tuple[str, ...] = ()
    outputs: tuple[str, ...] = ()
    config: dict[str, Any] = field(default_factory=dict)
    tool_version: str = field(default_factory=lambda: tool_version())
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds"))

    @classmethod
    def for_run(
        cls,
        command: str,
        settings: Settings,
        *,
        inputs: list[str] | tuple[str, ...] = (),
        outputs: list[str] | tuple[str, ...] = (),
    ) -> RunManifest:
        return cls(command=command, inputs=tuple(inputs), outputs=tuple(outputs), config=settings.to_dict())

    def to_dict(self) -> dict[str, Any]:
        payload = asdict(self)
        payload["inputs"] = list(self.inputs)
        payload["outputs"] = list(self.outputs)
        return payload


def tool_version() -> str:
    try:
        return version(PACKAGE)
    except PackageNotFoundError:
        return "0+unknown"


def dumps(document: dict[str, Any]) -> str:
    """Serialize a document, stamping the schema."""

    payload = {"schema": SCHEMA, **document}
    return json.dumps(_jsonable(payload), sort_keys=True, indent=2, allow_nan=False) + "\n"


def write_document(path: str | Path, document: dict[str, Any]) -> None:
    Path(path).write_text(dumps(document), encoding="utf-8")


def read_document(path: str | Path) -> dict[str, Any]:
    """Load a `hankel/v1` document; a missing schema field is accepted."""

    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError.config_unreadable(str(path)) from exc
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError.invalid_json(str(path)) from exc
    if not isinstance(payload, dict):
        raise ValidationError.schema_mismatch("document root must be an object")
    schema = payload.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise ValidationError.schema_mismatch(f"unsupported schema '{schema}', expected '{SCHEMA}'")
    return payload


def document_body(payload: dict[str, Any]) -> dict[str, Any]:
    """The `result` object of a command output document, else the document itself."""

    body = payload.get("result")
    return body if isinstance(body, dict) else payload


def measure_from_dict(payload: dict[str, Any]) -> Measure:
    """Build a measure from a named family or from atoms and density pieces."""

    if "family" in payload:
        params = payload.get("params") or {}
        if not isinstance(params, dict):
            raise ValidationError.schema_mismatch("'params' must be an object")
        return build_family(str(payload["family"]), **params)
    unknown = set(payload) - {"schema", "atoms", "densities", "support"}
    if unknown:
        raise ValidationError.schema_mismatch(f"unknown measure keys {sorted(unknown)}")
    atoms = [(_real(item, "x"), _real(item, "w")) for item in _list(payload, "atoms")]
    pieces = [_piece(item) for item in _list(payload, "densities")]
    support = payload.get("support")
    if support is not None:
        if not isinstance(support, list) or len(support) != 2:
            raise ValidationError.schema_mismatch("'support' must be [lo, hi]")
        support = (_as_float(support[0], "support"), _as_float(support[1], "support"))
    if not atoms and not pieces:
        raise ValidationError.schema_mismatch("a measure needs atoms, densities or a family")
    return Measure.from_parts(atoms, pieces, support=support)


def measure_to_dict(m: Measure) -> dict[str, Any]:
    if m.family is not None:
        return {"family": m.family, "params": dict(m.params)}
    densities = []
    for piece in m.pieces:
        text = getattr(piece.density, "text", None)
        if text is None:
            raise ValidationError.schema_mismatch("only grammar-backed densities can be serialized")
        entry: dict[str, Any] = {"a": piece.a, "b": piece.b, "expr": text, "singular": piece.hint.value}
        params = getattr(piece.density, "params", None)
        if params:
            entry["params"] = dict(params)
        densities.append(entry)
    return {
        "atoms": [{"x": atom.location, "w": atom.weight} for atom in m.atoms],
        "densities": densities,
        "support": list(m.declared_support),
    }


def moments_to_dict(
    q: MomentSequence | None,
    *,
    signs: np.ndarray | None = None,
    log_values: np.ndarray | None = None,
    decay: Decay | None = None,
) -> dict[str, Any]:
    decay = decay if decay is not None else (q.decay if q is not None else None)
    payload: dict[str, Any] = {
        "kind": "moments",
        "values": None if q is None else q.values.tolist(),
        "decay": decay.to_symbol() if decay is not None else None,
    }
    if log_values is not None:
        payload["log_values"] = np.asarray(log_values).tolist()
        payload["signs"] = np.asarray(signs).tolist() if signs is not None else None
    return payload


def moments_from_dict(payload: dict[str, Any]) -> MomentSequence:
    values = payload.get("values")
    if not isinstance(values, list) or not values:
        raise ValidationError.schema_mismatch("moments need a non-empty 'values' array")
    decay = payload.get("decay")
    if decay is not None and not isinstance(decay, str):
        raise ValidationError.schema_mismatch("'decay' must be a string or null")
    return MomentSequence.from_values([_as_float(v, "values") for v in values], decay)


def coeffs_from_dict(payload: dict[str, Any]) -> CoeffVector:
    values = payload.get("g")
    if not isinstance(values, list) or not values:
        raise ValidationError.schema_mismatch("coefficient vectors need a non-empty 'g' array")
    return CoeffVector.of([_as_float(v, "g") for v in values])


def report_to_dict(report: ClassificationReport) -> dict[str, Any]:
    payload = asdict(report)
    payload["kind"] = "classification"
    payload["decay"] = report.decay.to_symbol() if report.decay is not None else None
    return payload


def tails_to_dict(evidence: TailEvidence) -> dict[str, Any]:
    return {
        "kind": "tails",
        "eps_grid": evidence.eps_grid.tolist(),
        "left_ratios": evidence.left_ratios.tolist(),
        "right_ratios": evidence.right_ratios.tolist(),
        "bounded_evidence": evidence.bounded_evidence,
        "compact_evidence": evidence.compact_evidence,
        "endpoint_masses": list(evidence.endpoint_masses),
    }


def profile_to_dict(profile: SpectralProfile) -> dict[str, Any]:
    return {
        "kind": "spectrum",
        "mode": profile.mode,
        "orders": list(profile.orders),
        "norms": profile.norms.tolist(),
        "top_eigenvalues": [values.tolist() for values in profile.top_eigenvalues],
        "growth_fit": profile.growth_fit,
        "monotone": profile.monotone,
    }


def suite_to_dict(result: SuiteResult) -> dict[str, Any]:
    return {
        "kind": "verification",
        "suite": result.name,
        "tolerance": result.tolerance,
        "max_deviation": result.max_deviation,
        "passed": result.passed,
        "rows": list(result.rows),
        "worst_case": result.worst_case,
    }


def intertwining_to_dict(report: IntertwiningReport) -> dict[str, Any]:
    return {
        "kind": "intertwining",
        "rows": [list(row) for row in report.rows()],
        "max_abs_deviation": report.max_abs_deviation,
        "sigma_discrepancy": report.sigma_discrepancy,
    }


def _piece(item: Any) -> DensityPiece:
    if not isinstance(item, dict):
        raise ValidationError.schema_mismatch("density entries must be objects")
    text = item.get("expr")
    if not isinstance(text, str):
        raise ValidationError.schema_mismatch("density entries need an 'expr' string")
    singular = item.get("singular", "none")
    try:
        hint = Hint(singular)
    except ValueError as exc:
        raise ValidationError.schema_mismatch(f"unknown singular hint '{singular}'") from exc
    params = item.get("params") or {}
    if not isinstance(params, dict):
        raise ValidationError.schema_mismatch("'params' must be an object")
    b = item.get("b")
    upper = math.inf if b in ("inf", None) and hint is Hint.LOG_SCALE else _real(item, "b")
    return DensityPiece(_real(item, "a"), upper, parse_expression(text, params), hint)


def _list(payload: dict[str, Any], key: str) -> list[Any]:
    value = payload.get(key, [])
    if not isinstance(value, list):
        raise ValidationError.schema_mismatch(f"'{key}' must be an array")
    return value


def _real(item: Any, key: str) -> float:
    if not isinstance(item, dict) or key not in item:
        raise ValidationError.schema_mismatch(f"missing '{key}'")
    return _as_float(item[key], key)


def _as_float(value: Any, key: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError.schema_mismatch(f"'{key}' must be a number")
    return float(value)


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        number = float(value)
        if math.isfinite(number):
            return number
        return "nan" if math.isnan(number) else ("inf" if number > 0 else "-inf")
    return value


__all__ = [
    "SCHEMA",
    "RunManifest",
    "coeffs_from_dict",
    "document_body",
    "dumps",
    "intertwining_to_dict",
    "measure_from_dict",
    "measure_to_dict",
    "moments_from_dict",
    "moments_to_dict",
    "profile_to_dict",
    "read_document",
    "report_to_dict",
    "suite_to_dict",
    "tails_to_dict",
    "tool_version",
    "write_document",
]
