"""Planar regions, rectangular lattices and torus orbits behind the criteria.

Three equivalent reformulations of the nonnegative commutator relation for
negative dilations live here:

* strict rounding: ``strict_round_down(n, a') <= strict_round_down(n, b')`` for all integers n;
* lattice: ``mu'Z x nu'Z`` misses the punctured diagonal strip D';
* torus: the cyclic subgroup generated by ``(sigma', tau')`` in R^2/Z^2 misses
  the projected modified corner rectangle.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .exactnum import (
    as_rat,
    floor_ceil,
    strict_floor_ceil,
    strict_round_down_scaled,
)


class Point(NamedTuple):
    x: Fraction
    y: Fraction


class RegionId(enum.Enum):
    APPROX_DIAGONAL = "D"
    PUNCTURED_DIAGONAL = "D'"
    UNION_DIAGONAL = "D+D'"


@dataclass(frozen=True)
class RectLattice:
    mu: Fraction
    nu: Fraction

    def __post_init__(self):
        for name in ("mu", "nu"):
            v = as_rat(getattr(self, name))
            if v <= 0:
                raise ValueError(f"lattice spacing {name} must be positive")
            object.__setattr__(self, name, v)

    def point(self, m: int, n: int) -> Point:
        return Point(m * self.mu, n * self.nu)


@dataclass(frozen=True)
class CornerRect:
    sigma: Fraction
    tau: Fraction

    def __post_init__(self):
        for name in ("sigma", "tau"):
            v = as_rat(getattr(self, name))
            if v <= 0:
                raise ValueError(f"corner rectangle side {name} must be positive")
            object.__setattr__(self, name, v)


# -- diagonal regions ---------------------------------------------------------

def in_approx_diagonal(x, y) -> bool:
    """Open unit squares along the diagonal: n < x, y < n + 1."""
    x, y = as_rat(x), as_rat(y)
    if x.denominator == 1 or y.denominator == 1:
        return False
    return math.floor(x) == math.floor(y)


def in_punctured_diagonal(x, y) -> bool:
    """Union over n of {n <= x <= n+1, n < y < n+1, x != y}."""
    x, y = as_rat(x), as_rat(y)
    if x == y:
        return False
    fx, cx = floor_ceil(x)
    for n in {cx - 1, fx}:
        if n <= x <= n + 1 and n < y < n + 1:
            return True
    return False


def punctured_by_rounding(x, y) -> bool:
    """floor(y) <= x < y  or  y < x <= ceil(y)."""
    x, y = as_rat(x), as_rat(y)
    fy, cy = floor_ceil(y)
    return fy <= x < y or y < x <= cy


def punctured_by_strict_rounding(x, y) -> bool:
    """strict_floor(x) < y < x  or  x < y < strict_ceil(x)."""
    x, y = as_rat(x), as_rat(y)
    sf, sc = strict_floor_ceil(x)
    return sf < y < x or x < y < sc


def region_contains(region: RegionId, p) -> bool:
    x, y = p
    if region is RegionId.APPROX_DIAGONAL:
        return in_approx_diagonal(x, y)
    if region is RegionId.PUNCTURED_DIAGONAL:
        return in_punctured_diagonal(x, y)
    if region is RegionId.UNION_DIAGONAL:
        return in_approx_diagonal(x, y) or in_punctured_diagonal(x, y)
    raise ValueError(f"unknown region {region!r}")


# -- modified corner rectangle on the torus -------------------------------------

def corner_rect_contains(rect: CornerRect, p) -> bool:
    """Planar membership: 0 <= x <= sigma, 0 < y < tau, x/sigma != y/tau."""
    x, y = as_rat(p[0]), as_rat(p[1])
    return 0 <= x <= rect.sigma and 0 < y < rect.tau and x * rect.tau != y * rect.sigma


def _corner_hit_scaled(X: int, Y: int, L: int, SL: int, TL: int) -> bool:
    # point (X/L, Y/L) in [0,1)^2; rectangle sides SL/L, TL/L
    xj = X
    while xj <= SL:
        yk = Y if Y > 0 else Y + L
        while yk < TL:
            if xj * TL != yk * SL:
                return True
            yk += L
        xj += L
    return False


def corner_rect_contains_torus(rect: CornerRect, p) -> bool:
    """Whether the torus point p (coordinates in [0, 1)) lies in the projected rectangle."""
    x, y = as_rat(p[0]), as_rat(p[1])
    if not (0 <= x < 1 and 0 <= y < 1):
        raise ValueError(f"torus point must have coordinates in [0, 1), got {(x, y)}")
    L = math.lcm(x.denominator, y.denominator, rect.sigma.denominator, rect.tau.denominator)
    return _corner_hit_scaled(
        int(x * L), int(y * L), L, int(rect.sigma * L), int(rect.tau * L)
    )


def torus_orbit(sigma, tau) -> list[Point]:
    """All points k*(sigma, tau) mod 1 of the finite cyclic subgroup, k = 0..N-1."""
    sigma, tau = as_rat(sigma), as_rat(tau)
    N = math.lcm(sigma.denominator, tau.denominator)
    return [Point((k * sigma) % 1, (k * tau) % 1) for k in range(N)]


def torus_hit(sigma, tau) -> Optional[int]:
    """Smallest k >= 0 whose orbit point lies in the projected corner rectangle."""
    sigma, tau = as_rat(sigma), as_rat(tau)
    if sigma <= 0 or tau <= 0:
        raise ValueError("sigma and tau must be positive")
    L = math.lcm(sigma.denominator, tau.denominator)
    SL, TL = int(sigma * L), int(tau * L)
    for k in range(L):
        if _corner_hit_scaled((k * SL) % L, (k * TL) % L, L, SL, TL):
            return k
    return None


def torus_criterion(sigma, tau) -> bool:
    return torus_hit(sigma, tau) is None


# -- strict rounding --------------------------------------------------------

def strict_rounding_certificate(alpha_p, beta_p) -> Optional[int]:
    """First n in [0, P) with strict_round_down(n, a') > strict_round_down(n, b'), else None."""
    alpha_p, beta_p = as_rat(alpha_p), as_rat(beta_p)
    if alpha_p <= 0 or beta_p <= 0:
        raise ValueError("strict rounding scales must be positive")
    # shifting n by P shifts both roundings by P
    P = alpha_p.numerator * beta_p.numerator
    for n in range(P):
        if strict_round_down_scaled(n, alpha_p) > strict_round_down_scaled(n, beta_p):
            return n
    return None


def strict_rounding_criterion(alpha_p, beta_p) -> bool:
    return strict_rounding_certificate(alpha_p, beta_p) is None


# -- lattices -------------------------------------------------------------------

def hyperbola_witness(mu, nu) -> Optional[tuple[int, int]]:
    """Least-m integers m >= 0, n >= 1 with m/mu + n/nu = 1, or None."""
    mu, nu = as_rat(mu), as_rat(nu)
    if mu <= 0 or nu <= 0:
        raise ValueError("mu and nu must be positive")
    for m in range(math.floor(mu) + 1):
        n = nu * (1 - m / mu)
        if n.denominator == 1 and n >= 1:
            return m, int(n)
    return None


def lattice_disjoint_punctured(mu, nu) -> bool:
    """Whether mu Z x nu Z misses D' (decided on the torus with (1/mu, 1/nu))."""
    mu, nu = as_rat(mu), as_rat(nu)
    return torus_criterion(1 / mu, 1 / nu)


def lattice_disjoint_union(mu, nu) -> bool:
    """Whether mu Z x nu Z misses D ∪ D' (rational mu, nu)."""
    return hyperbola_witness(mu, nu) is not None


def diag_lemma_predicates(u, v, r: int) -> tuple[bool, bool, bool]:
    """Closed forms of the three disjointness conditions for the lattices
    spanned by ``(1+u, v), (1, 1)`` and ``(1+u/r, v/r), (1/r, 1/r)``.

    Requires ``1 + u > v``.
    """
    u, v = as_rat(u), as_rat(v)
    if r < 1:
        raise ValueError("r must be a positive integer")
    if not 1 + u > v:
        raise ValueError(f"requires 1 + u > v, got u={u}, v={v}")
    s2 = v <= math.ceil(u)
    # ceiling rounding at scale 1/r of u/r
    s3 = v / r <= Fraction(math.ceil(r * (u / r)), r)
    # the lattice meets the diagonal only at integer points when 1 + u != v
    s1 = s2 and (1 + u) != v
    return s1, s2, s3
