"""Polynomials in the power basis with exact Taylor shifts.

A polynomial is a fixed-length tuple of Fractions a_0..a_m in ascending
degree. Degree is positional (length - 1): transforms never trim trailing
zeros implicitly, because the boundary-coefficient identities are stated in
terms of positions m-1, m-2 relative to the representation length. Trimming
is the explicit, opt-in :func:`normalize`.

Two independent Taylor-shift algorithms are provided and must agree exactly:
the naive binomial expansion (the oracle) and repeated synthetic division
(the fast default).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .numeric_core import DomainError, as_rational, binomial

__all__ = [
    "BoundaryCoeffs",
    "Polynomial",
    "ShiftAlgorithm",
    "boundary_coeffs",
    "mul_by_x_plus_one",
    "normalize",
    "taylor_shift",
]


class ShiftAlgorithm(enum.Enum):
    """Strategy selector for :func:`taylor_shift`."""

    NAIVE_BINOMIAL = "naive"
    HORNER_SYNTHETIC = "horner"


@dataclass(frozen=True)
class Polynomial:
    """Immutable power-basis polynomial; coeffs[k] multiplies x**k."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Fraction | int]) -> None:
        entries = tuple(as_rational(c) for c in coeffs)
        if not entries:
            raise DomainError("a polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", entries)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Fraction | int) -> Fraction:
        """Evaluate at an exact point by Horner's rule."""
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def taylor_shift(p: Polynomial, c: Fraction | int,
                 algo: ShiftAlgorithm = ShiftAlgorithm.HORNER_SYNTHETIC) -> Polynomial:
    """Return B with B(x) = P(x + c), same representation length as P."""
    c = as_rational(c)
    if algo is ShiftAlgorithm.NAIVE_BINOMIAL:
        return Polynomial(_shift_naive(p.coeffs, c))
    if algo is ShiftAlgorithm.HORNER_SYNTHETIC:
        return Polynomial(_shift_horner(p.coeffs, c))
    raise DomainError(f"unknown shift algorithm {algo!r}")


def _shift_naive(coeffs: tuple[Fraction, ...], c: Fraction) -> list[Fraction]:
    """Expand each a_k (x + c)^k by the binomial theorem and sum."""
    n = len(coeffs)
    out = [Fraction(0)] * n
    powers = [Fraction(1)]
    for _ in range(n - 1):
        powers.append(powers[-1] * c)
    for k, a_k in enumerate(coeffs):
        if a_k == 0:
            continue
        for j in range(k + 1):
            out[j] += a_k * binomial(k, j) * powers[k - j]
    return out


def _shift_horner(coeffs: tuple[Fraction, ...], c: Fraction) -> list[Fraction]:
    """Repeated synthetic division: after pass i, b[i] is final."""
    out = list(coeffs)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += c * out[j + 1]
    return out


def mul_by_x_plus_one(b: Polynomial) -> Polynomial:
    """Multiply by (x + 1): result coefficient k is a_{k-1} + a_k."""
    a = b.coeffs
    zero = Fraction(0)
    return Polynomial(
        (a[k] if k == 0 else a[k - 1] if k == len(a) else a[k - 1] + a[k])
        for k in range(len(a) + 1)
    )


class BoundaryCoeffs(NamedTuple):
    b0: Fraction
    b1: Fraction
    b_m_minus_2: Fraction
    b_m_minus_1: Fraction
    b_m: Fraction


def boundary_coeffs(p: Polynomial) -> BoundaryCoeffs:
    """Closed forms for coefficients 0, 1, m-2, m-1, m of P(x + 1).

    b_0 = sum a_k, b_1 = sum k a_k, b_{m-2} = a_{m-2} + (m-1) a_{m-1}
    + C(m,2) a_m, b_{m-1} = a_{m-1} + m a_m, b_m = a_m. Requires degree
    m >= 2 so the four index positions are distinct from the tail.
    """
    a = p.coeffs
    m = p.degree
    if m < 2:
        raise DomainError(f"boundary coefficients need degree >= 2, got {m}")
    return BoundaryCoeffs(
        b0=sum(a, Fraction(0)),
        b1=sum((k * a_k for k, a_k in enumerate(a)), Fraction(0)),
        b_m_minus_2=a[m - 2] + (m - 1) * a[m - 1] + binomial(m, 2) * a[m],
        b_m_minus_1=a[m - 1] + m * a[m],
        b_m=a[m],
    )


def normalize(p: Polynomial) -> Polynomial:
    """Trim trailing zero coefficients; the zero polynomial stays (0,)."""
    coeffs = p.coeffs
    end = len(coeffs)
    while end > 1 and coeffs[end - 1] == 0:
        end -= 1
    return Polynomial(coeffs[:end])
