"""Exact generation of the Boros-Moll polynomial family.

The degree-m Boros-Moll polynomial is

    P_m(x) = sum_{k=0}^{m} c_k(m) (x + 1)^k,
    c_k(m) = 2^{k-2m} C(2m-2k, m-k) C(m+k, k),

so the coefficient sequence of P_m(x - 1) is just (c_0(m), ..., c_m(m)),
a positive nondecreasing sequence. Consecutive coefficients satisfy

    c_k(m) / c_{k+1}(m) = (2m-2k-1)(k+1) / ((m-k)(m+k+1)) < 1.

Everything in this module is exact: powers of two live in rational
denominators and the power-basis expansion reuses the exact Taylor-shift
machinery. No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numeric_core import DomainError, binomial
from .poly_ops import Polynomial, taylor_shift

__all__ = [
    "BmRatioCheck",
    "bm_coefficient",
    "bm_polynomial",
    "bm_ratio_identity",
    "bm_shifted_seq",
]


def bm_coefficient(m: int, k: int) -> Fraction:
    """c_k(m) = 2^{k-2m} C(2m-2k, m-k) C(m+k, k), exactly."""
    if not 0 <= k <= m:
        raise DomainError(f"need 0 <= k <= m, got k={k}, m={m}")
    return Fraction(binomial(2 * m - 2 * k, m - k) * binomial(m + k, k),
                    2 ** (2 * m - k))


@dataclass(frozen=True)
class BmRatioCheck:
    """Both sides of the consecutive-coefficient ratio identity."""

    lhs: Fraction
    rhs: Fraction
    equal: bool
    below_one: bool


def bm_ratio_identity(m: int, k: int) -> BmRatioCheck:
    """Compare c_k(m)/c_{k+1}(m) with (2m-2k-1)(k+1)/((m-k)(m+k+1)).

    Both equal and below_one are expected true for every 0 <= k <= m-1.
    """
    if not 0 <= k <= m - 1:
        raise DomainError(f"need 0 <= k <= m-1, got k={k}, m={m}")
    lhs = bm_coefficient(m, k) / bm_coefficient(m, k + 1)
    rhs = Fraction((2 * m - 2 * k - 1) * (k + 1), (m - k) * (m + k + 1))
    return BmRatioCheck(lhs=lhs, rhs=rhs, equal=lhs == rhs, below_one=lhs < 1)


def bm_shifted_seq(m: int) -> tuple[Fraction, ...]:
    """(c_0(m), ..., c_m(m)): the coefficient sequence of P_m(x - 1)."""
    if m < 0:
        raise DomainError(f"need m >= 0, got {m}")
    return tuple(bm_coefficient(m, k) for k in range(m + 1))


def bm_polynomial(m: int) -> Polynomial:
    """P_m in the power basis: shift the (x+1)-basis coefficients by one."""
    return taylor_shift(Polynomial(bm_shifted_seq(m)), 1)
