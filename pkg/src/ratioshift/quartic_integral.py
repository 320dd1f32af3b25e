"""Floating-point verification of the quartic-integral identity.

For x > -1 and integer m >= 0,

    integral_0^inf dt / (t^4 + 2xt^2 + 1)^(m+1)
        = pi / (2^(m+3/2) (x+1)^(m+1/2)) * P_m(x),

with P_m the degree-m Boros-Moll polynomial. The left side is evaluated
numerically, the right side from the exact coefficients, and the two are
compared at a stated relative tolerance.

The improper integral is folded onto [0, 1] through the symmetry t -> 1/u:

    integral_0^inf f dt = integral_0^1 (1 + u^(4m+2)) / (u^4 + 2xu^2 + 1)^(m+1) du,

whose integrand is smooth and bounded for x > -1 (the denominator is
(u^2-1)^2 + 2(x+1)u^2 > 0 on (0, 1]), so there is no tail truncation at all.
Quadrature is iterated composite Simpson with panel doubling and a
Richardson error estimate, capped in refinement depth.

This is the only module that touches floating point, and only at its
boundary: polynomial values are computed in exact rationals first and
converted to float last.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .boros_moll import bm_polynomial
from .numeric_core import DomainError

__all__ = [
    "IntegralCheck",
    "QuadratureError",
    "closed_form_rhs",
    "folded_integrand",
    "integrand",
    "quadrature_lhs",
    "simpson_refine",
    "verify_identity",
]

_MAX_DOUBLINGS = 22


class QuadratureError(RuntimeError):
    """Adaptive refinement failed to converge within the iteration cap."""

    def __init__(self, message: str, *, iterations: int, last_value: float,
                 last_error: float) -> None:
        super().__init__(
            f"{message} (iterations={iterations}, last_value={last_value!r}, "
            f"last_error_estimate={last_error!r})")
        self.iterations = iterations
        self.last_value = last_value
        self.last_error = last_error


def integrand(t: float, x: float, m: int) -> float:
    """The raw integrand 1 / (t^4 + 2xt^2 + 1)^(m+1)."""
    return ((t * t + 2.0 * x) * t * t + 1.0) ** (-(m + 1))


def folded_integrand(u: float, x: float, m: int) -> float:
    """Integrand after folding [1, inf) back onto [0, 1] via t -> 1/u."""
    return (1.0 + u ** (4 * m + 2)) / ((u * u + 2.0 * x) * u * u + 1.0) ** (m + 1)


def simpson_refine(f: Callable[[float], float], a: float, b: float, tol: float,
                   max_doublings: int = _MAX_DOUBLINGS) -> float:
    """Composite Simpson with panel doubling until the Richardson estimate
    |S_2n - S_n| / 15 drops to ``tol`` relative to the value.

    Function evaluations are reused across refinements by building Simpson
    values from the trapezoid ladder, S_2n = (4 T_2n - T_n) / 3.
    """
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    trap = 0.5 * (b - a) * (f(a) + f(b))
    simpson_prev = None
    last_err = math.inf
    panels = 1
    for _ in range(max_doublings):
        h = (b - a) / panels
        midsum = math.fsum(f(a + (i + 0.5) * h) for i in range(panels))
        trap_next = 0.5 * (trap + h * midsum)
        simpson = (4.0 * trap_next - trap) / 3.0
        if simpson_prev is not None:
            last_err = abs(simpson - simpson_prev) / 15.0
            scale = max(abs(simpson), 1e-300)
            if last_err <= tol * scale:
                return simpson
        trap, simpson_prev, panels = trap_next, simpson, panels * 2
    raise QuadratureError(
        "Simpson refinement did not converge",
        iterations=max_doublings,
        last_value=simpson_prev if simpson_prev is not None else trap,
        last_error=last_err,
    )


def _check_domain(x: float, m: int) -> None:
    if not x > -1:
        raise DomainError(f"need x > -1, got x = {x}")
    if m < 0:
        raise DomainError(f"need m >= 0, got m = {m}")


def quadrature_lhs(x: float, m: int, tol: float) -> float:
    """Numerical value of the quartic integral over [0, inf).

    Evaluated on the [0, 1] fold; estimated relative error at most ``tol``.
    """
    _check_domain(x, m)
    # Halve the requested tolerance so the estimate has headroom.
    return simpson_refine(lambda u: folded_integrand(u, x, m), 0.0, 1.0, tol / 2.0)


def closed_form_rhs(x: float, m: int) -> float:
    """pi / (2^(m+3/2) (x+1)^(m+1/2)) * P_m(x).

    P_m is evaluated exactly at the dyadic rational the float x denotes;
    only the final value is converted to float.
    """
    _check_domain(x, m)
    p_m = bm_polynomial(m)(Fraction(x))
    return math.pi * float(p_m) / (2.0 ** (m + 1.5) * (x + 1.0) ** (m + 0.5))


@dataclass(frozen=True)
class IntegralCheck:
    """One (m, x) comparison of quadrature against the closed form."""

    m: int
    x: float
    lhs: float
    rhs: float
    rel_err: float
    tol: float
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "x": self.x,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "rel_err": self.rel_err,
            "tol": self.tol,
            "pass": self.passed,
        }


def verify_identity(x: float, m: int, tol: float) -> IntegralCheck:
    """Populate an IntegralCheck; pass means rel_err <= tol.

    The quadrature runs two orders of magnitude tighter than the comparison
    tolerance so its own error does not consume the budget.
    """
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    lhs = quadrature_lhs(x, m, max(tol * 1e-2, 1e-13))
    rhs = closed_form_rhs(x, m)
    rel_err = abs(lhs - rhs) / abs(rhs)
    return IntegralCheck(m=m, x=x, lhs=lhs, rhs=rhs, rel_err=rel_err, tol=tol,
                         passed=rel_err <= tol)
