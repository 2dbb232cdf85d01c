"""Exact rational helpers: integer parts, strict rounding, extended gcd/lcm.

All scalars are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator, so equality is structural.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

Rat = Fraction

_RAT_TEXT = re.compile(r"^\s*([-−]?)(\d+)(?:/(\d+))?\s*$")


def as_rat(x) -> Fraction:
    """Coerce ints and Fractions to Fraction; floats and strings are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, (int, _RationalABC)):
        raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    """Parse ``"-3/2"``, ``"5"`` or ``"−6/4"``; decimals are rejected."""
    m = _RAT_TEXT.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r} (use an integer or a/b)")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign else value


def format_rational(x: Fraction) -> str:
    return str(x)


def floor_ceil(x) -> tuple[int, int]:
    x = as_rat(x)
    return math.floor(x), math.ceil(x)


def strict_floor_ceil(x) -> tuple[int, int]:
    """Largest integer < x and smallest integer > x."""
    x = as_rat(x)
    return math.ceil(x) - 1, math.floor(x) + 1


def strict_floor(x) -> int:
    return math.ceil(as_rat(x)) - 1


def strict_ceil(x) -> int:
    return math.floor(as_rat(x)) + 1


def round_down_scaled(x, a) -> Fraction:
    """``a * floor(x / a)``: the multiple of ``a`` reached by rounding x/a down."""
    x, a = as_rat(x), as_rat(a)
    if a == 0:
        raise ValueError("rounding scale must be nonzero")
    return a * math.floor(x / a)


def strict_round_down_scaled(x, a) -> Fraction:
    """``a * strict_floor(x / a)``, with scale 0 meaning the identity."""
    x, a = as_rat(x), as_rat(a)
    if a == 0:
        return x
    return a * strict_floor(x / a)


def strict_round_up_scaled(x, a) -> Fraction:
    x, a = as_rat(x), as_rat(a)
    if a == 0:
        return x
    return a * strict_ceil(x / a)


def _positive(x, name: str) -> Fraction:
    x = as_rat(x)
    if x <= 0:
        raise ValueError(f"{name} must be positive, got {x}")
    return x


def _common_numerators(u: Fraction, v: Fraction) -> tuple[int, int, int]:
    d = math.lcm(u.denominator, v.denominator)
    return u.numerator * (d // u.denominator), v.numerator * (d // v.denominator), d


def egcd(u, v) -> Fraction:
    """Positive generator w of the group uZ + vZ (rational inputs only)."""
    u, v = _positive(u, "u"), _positive(v, "v")
    a, b, d = _common_numerators(u, v)
    return Fraction(math.gcd(a, b), d)


def elcm(u, v) -> Fraction:
    """Positive generator w of uZ ∩ vZ (rational inputs only)."""
    u, v = _positive(u, "u"), _positive(v, "v")
    a, b, d = _common_numerators(u, v)
    return Fraction(math.lcm(a, b), d)


def lowest_terms_neg(alpha) -> tuple[int, int]:
    """Write a negative rational as ``-q/p`` with coprime p, q >= 1; returns (p, q)."""
    alpha = as_rat(alpha)
    if alpha >= 0:
        raise ValueError(f"expected a negative rational, got {alpha}")
    return alpha.denominator, -alpha.numerator
