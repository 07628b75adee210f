"""Default registry bindings for built-in families and suites."""

from __future__ import annotations

from . import verification
from .measure import families
from .registry import register_family, register_suite


def register_defaults() -> None:
    register_family("lebesgue01", families.lebesgue01)
    register_family("lebesgue", families.lebesgue)
    register_family("hilbert", families.hilbert)
    register_family("compact", families.compact)
    register_family("slow", families.slow)
    register_family("inverse_square", families.inverse_square)
    register_family("ones", families.ones)
    register_family("geometric", families.geometric)
    register_family("delta0", families.delta0)
    register_family("atom", families.atom)
    register_family("stieltjes", families.stieltjes)

    register_suite("form", verification.run_form)
    register_suite("intertwine", verification.run_intertwine)
    register_suite("laguerre", verification.run_laguerre)
    register_suite("transport", verification.run_transport)
    register_suite("closure", verification.run_closure)
    register_suite("unitarity", verification.run_unitarity)
