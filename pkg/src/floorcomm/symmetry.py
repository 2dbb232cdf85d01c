"""Maps that carry the negative-dilation solution set into itself.

Linear: ``(alpha, beta) -> (m*alpha, beta)`` and ``(alpha, beta) -> (alpha/m, beta/m)``.
Linear fractional, on a fixed line ``alpha = -q/p``::

    phi_p^r(beta) = r*beta / ((1 - r)*p*beta + 1)

which in mu' = -1/beta coordinates is the affine contraction towards p,
``psi_p^r(mu') = (mu' - p)/r + p``.  The maps with fixed p form a
commutative semigroup, ``phi_p^r o phi_p^s = phi_p^(rs)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exactnum import as_rat


@dataclass(frozen=True)
class PhiMap:
    p: int
    r: int

    def __post_init__(self):
        if self.p < 1 or self.r < 1:
            raise ValueError(f"PhiMap needs p >= 1 and r >= 1, got p={self.p}, r={self.r}")

    def __call__(self, beta) -> Fraction:
        beta = as_rat(beta)
        den = (1 - self.r) * self.p * beta + 1
        if den == 0:
            raise ZeroDivisionError(f"phi_{self.p}^{self.r} has a pole at beta={beta}")
        return self.r * beta / den

    def compose(self, other: "PhiMap") -> "PhiMap":
        if other.p != self.p:
            raise ValueError("can only compose maps with the same p")
        return PhiMap(self.p, self.r * other.r)

    def fixed_points(self) -> tuple[Fraction, Fraction]:
        return Fraction(0), Fraction(-1, self.p)


def phi(map_or_p, beta_or_r, beta=None) -> Fraction:
    """``phi(PhiMap(p, r), beta)`` or ``phi(p, r, beta)``."""
    if isinstance(map_or_p, PhiMap):
        return map_or_p(beta_or_r)
    return PhiMap(map_or_p, beta_or_r)(beta)


def psi(p: int, r: int, mu) -> Fraction:
    if p < 1 or r < 1:
        raise ValueError(f"psi needs p >= 1 and r >= 1, got p={p}, r={r}")
    return (as_rat(mu) - p) / r + p


def J(mu) -> Fraction:
    """The conjugating map mu' -> beta = -1/mu'."""
    return -1 / as_rat(mu)


def scale_alpha_symmetry(alpha, beta, m: int) -> tuple[Fraction, Fraction]:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return m * as_rat(alpha), as_rat(beta)


def scale_both_symmetry(alpha, beta, m: int) -> tuple[Fraction, Fraction]:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return as_rat(alpha) / m, as_rat(beta) / m


def phi_orbit(p: int, beta0, r_values: Iterable[int]) -> list[Fraction]:
    """Images of beta0 under phi_p^r for each r, deduplicated in first-seen order."""
    beta0 = as_rat(beta0)
    if beta0 >= 0:
        raise ValueError("beta0 must be negative")
    seen = {}
    for r in r_values:
        seen.setdefault(PhiMap(p, r)(beta0), None)
    return list(seen)
