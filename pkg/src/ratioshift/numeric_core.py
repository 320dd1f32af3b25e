"""Exact integer and rational arithmetic primitives.

Python's built-in ``int`` already provides exact arbitrary-precision signed
integers, and :class:`fractions.Fraction` keeps rationals in canonical form
(positive denominator, gcd-reduced numerator), so those are the scalar types
used throughout. This module adds the comparison and parsing primitives the
rest of the package is built on. Every inequality between ratios is decided
by cross-multiplication on exact integers, never by division.
"""

from __future__ import annotations

import re
from fractions import Fraction

# The canonical rational scalar. Immutable, always normalized.
Rational = Fraction

__all__ = [
    "DomainError",
    "ParseError",
    "Rational",
    "as_rational",
    "binomial",
    "parse_rational",
    "ratio_leq",
    "render_rational",
]


class DomainError(ValueError):
    """An operation was called outside its stated domain."""


class ParseError(ValueError):
    """Malformed rational text. ``position`` is the offending 0-based offset."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


def binomial(n: int, k: int) -> int:
    """Return C(n, k) exactly; 0 when k > n.

    Uses the multiplicative formula with exact intermediate division
    (each prefix product is divisible by i!).
    """
    if n < 0 or k < 0:
        raise DomainError(f"binomial requires nonnegative arguments, got ({n}, {k})")
    if k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


def ratio_leq(p_num: Fraction | int, p_den: Fraction | int,
              q_num: Fraction | int, q_den: Fraction | int) -> bool:
    """Decide p_num/p_den <= q_num/q_den without dividing.

    Denominators must be positive; cross-multiplication then preserves the
    inequality direction and is exact.
    """
    if p_den <= 0 or q_den <= 0:
        raise DomainError(
            f"ratio_leq requires positive denominators, got {p_den} and {q_den}"
        )
    return p_num * q_den <= q_num * p_den


_INTEGER_RE = re.compile(r"[+-]?[0-9]+\Z")
_FRACTION_RE = re.compile(r"([+-]?[0-9]+)/([0-9]+)\Z")
_DECIMAL_RE = re.compile(r"([+-]?)([0-9]*)\.([0-9]*)\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``p``, ``p/q``, or a decimal literal into an exact Fraction.

    Decimals are scaled by a power of ten, never routed through floating
    point, so e.g. ``"0.1"`` is exactly 1/10.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty rational literal", 0)
    if _INTEGER_RE.match(stripped):
        return Fraction(int(stripped))
    m = _FRACTION_RE.match(stripped)
    if m:
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise DomainError(f"zero denominator in {stripped!r}")
        return Fraction(num, den)
    m = _DECIMAL_RE.match(stripped)
    if m:
        sign, whole, frac = m.groups()
        if not whole and not frac:
            raise ParseError(f"no digits in decimal literal {stripped!r}", 0)
        value = Fraction(int(whole or "0") * 10 ** len(frac) + int(frac or "0"),
                         10 ** len(frac))
        return -value if sign == "-" else value
    # Report the first character that cannot appear in a literal, if any.
    pos = next((i for i, ch in enumerate(stripped) if ch not in "+-/.0123456789"), 0)
    raise ParseError(f"malformed rational literal {stripped!r}", pos)


def render_rational(value: Fraction | int) -> str:
    """Canonical text form: ``p/q`` with q > 0 and gcd 1, or ``p`` when q = 1."""
    return str(Fraction(value))


def as_rational(value: Fraction | int) -> Fraction:
    """Coerce an exact scalar to Fraction, rejecting floats.

    Floats are refused everywhere exact values are expected; converting one
    silently would smuggle a binary approximation into exact arithmetic.
    """
    if isinstance(value, float):
        raise TypeError(
            f"refusing to treat float {value!r} as an exact rational; "
            "convert explicitly via Fraction if the dyadic value is intended"
        )
    return Fraction(value)
