"""Coordinate frames, witness searches and the top-level membership decision.

A pair (alpha, beta) of negative rationals has a nonnegative commutator iff
one of three witnesses exists:

* ``CaseI(m, n)``: ``m*alpha*beta - n*beta == -alpha`` with m >= 0, n >= 1;
* ``CaseII(p, q)``: ``alpha == -q/p`` in lowest terms and ``beta >= -1/p``;
* ``CaseIIIStar(p, q, m, n, r)``: ``alpha == -q/p`` and
  ``beta == -1 / (p * (1 + (m/p + n/q - 1) / r))``.

The third family covers every rational member; the first two carry the
irrational members and are kept both for completeness and because they
separate the sporadic points from the curves and segments.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .commutator import DilationPair, Procedure, Verdict, as_pair, commutator_at
from .exactnum import as_rat, lowest_terms_neg, strict_round_down_scaled
from .geometry import hyperbola_witness, strict_rounding_certificate


# -- frames -----------------------------------------------------------------

class Frame(enum.Enum):
    AB = "ab"
    PRIMED = "primed"
    MUV = "muv"
    SIGMATAU = "sigmatau"


@dataclass(frozen=True)
class Frames:
    ab: tuple[Fraction, Fraction]
    primed: tuple[Fraction, Fraction]
    muv: tuple[Fraction, Fraction]
    sigmatau: tuple[Fraction, Fraction]

    def get(self, frame: Frame) -> tuple[Fraction, Fraction]:
        return getattr(self, frame.value)

    def as_dict(self) -> dict:
        return {f.value: [str(c) for c in self.get(f)] for f in Frame}


def to_frames(alpha, beta=None) -> Frames:
    pair = as_pair(alpha, beta)
    a, b = pair.alpha, pair.beta
    return Frames(
        ab=(a, b),
        primed=(-a, -b),
        muv=(-1 / b, a / b),
        sigmatau=(-b, b / a),
    )


def to_frame(frame: Frame, alpha, beta) -> tuple[Fraction, Fraction]:
    return to_frames(alpha, beta).get(frame)


def from_frame(frame: Frame, x, y) -> tuple[Fraction, Fraction]:
    """Inverse of :func:`to_frame`: window coordinates back to (alpha, beta)."""
    x, y = as_rat(x), as_rat(y)
    if frame is Frame.AB:
        return x, y
    if frame is Frame.PRIMED:
        return -x, -y
    if frame is Frame.MUV:
        # alpha' = nu'/mu', beta' = 1/mu'
        return -y / x, -1 / x
    if frame is Frame.SIGMATAU:
        # alpha' = sigma'/tau', beta' = sigma'
        return -x / y, -x
    raise ValueError(f"unknown frame {frame!r}")


def from_frames(frames: Frames) -> tuple[Fraction, Fraction]:
    return frames.ab


# -- witnesses ------------------------------------------------------------------

@dataclass(frozen=True)
class CaseI:
    m: int
    n: int
    case = "i"

    def holds_at(self, alpha: Fraction, beta: Fraction) -> bool:
        return self.m >= 0 and self.n >= 1 and self.m * alpha * beta - self.n * beta == -alpha

    def as_dict(self) -> dict:
        return {"case": self.case, "p": None, "q": None, "m": self.m, "n": self.n, "r": None}


@dataclass(frozen=True)
class CaseII:
    p: int
    q: int
    case = "ii"

    def holds_at(self, alpha: Fraction, beta: Fraction) -> bool:
        return (
            math.gcd(self.p, self.q) == 1
            and alpha == Fraction(-self.q, self.p)
            and Fraction(-1, self.p) <= beta < 0
        )

    def as_dict(self) -> dict:
        return {"case": self.case, "p": self.p, "q": self.q, "m": None, "n": None, "r": None}


@dataclass(frozen=True)
class CaseIIIStar:
    p: int
    q: int
    m: int
    n: int
    r: int
    case = "iii*"

    @property
    def beta(self) -> Fraction:
        return beta_from_params(self.p, self.q, self.m, self.n, self.r)

    def holds_at(self, alpha: Fraction, beta: Fraction) -> bool:
        return alpha == Fraction(-self.q, self.p) and beta == self.beta

    def as_dict(self) -> dict:
        return {"case": self.case, "p": self.p, "q": self.q, "m": self.m, "n": self.n, "r": self.r}


Witness = Union[CaseI, CaseII, CaseIIIStar]


def case_i_witness(alpha, beta=None) -> Optional[CaseI]:
    mu, nu = to_frames(alpha, beta).muv
    found = hyperbola_witness(mu, nu)
    return None if found is None else CaseI(*found)


def case_ii_witness(alpha, beta=None) -> Optional[CaseII]:
    pair = as_pair(alpha, beta)
    p, q = lowest_terms_neg(pair.alpha)
    return CaseII(p, q) if pair.beta >= Fraction(-1, p) else None


def semigroup_representable(N: int, p: int, q: int) -> Optional[tuple[int, int]]:
    """Least-n solution of ``m*q + n*p == N`` with m >= 0, n >= 1."""
    if p < 1 or q < 1 or math.gcd(p, q) != 1:
        raise ValueError(f"p, q must be coprime positive integers, got {p}, {q}")
    for n in range(1, N // p + 1):
        rest = N - n * p
        if rest % q == 0:
            return rest // q, n
    return None


def beta_from_params(p: int, q: int, m: int, n: int, r: int) -> Fraction:
    if p < 1 or q < 1 or math.gcd(p, q) != 1:
        raise ValueError(f"p, q must be coprime positive integers, got {p}, {q}")
    if m < 0 or n < 1 or r < 1:
        raise ValueError(f"need m >= 0, n >= 1, r >= 1, got m={m}, n={n}, r={r}")
    lam = 1 + (Fraction(m, p) + Fraction(n, q) - 1) / r
    return -1 / (p * lam)


def _iii_star_candidates(p: int, q: int, lam: Fraction) -> range:
    if lam < 1:
        # ell = 1 + r(lam - 1) >= n/q >= 1/q bounds r
        return range(1, math.floor((1 - Fraction(1, q)) / (1 - lam)) + 1)
    if lam == 1:
        return range(1, 2)
    # pq*ell is integral exactly when r clears the denominator of pq(lam - 1)
    r = (p * q * (lam - 1)).denominator
    return range(r, r + 1)


def case_iii_star_witness(alpha, beta=None) -> Optional[CaseIIIStar]:
    pair = as_pair(alpha, beta)
    p, q = lowest_terms_neg(pair.alpha)
    lam = -1 / (p * pair.beta)
    for r in _iii_star_candidates(p, q, lam):
        N = p * q * (1 + r * (lam - 1))
        if N.denominator != 1 or N < 0:
            continue
        found = semigroup_representable(int(N), p, q)
        if found is not None:
            return CaseIIIStar(p, q, found[0], found[1], r)
    return None


# -- decision ----------------------------------------------------------------

class Kind(enum.Enum):
    CASE_I_CURVE = "CaseICurve"
    CASE_II_SEGMENT = "CaseIISegment"
    SPORADIC = "Sporadic"
    NOT_IN_S = "NotInS"


def witnesses(alpha, beta=None) -> list[Witness]:
    pair = as_pair(alpha, beta)
    found = [
        case_i_witness(pair.alpha, pair.beta),
        case_ii_witness(pair.alpha, pair.beta),
        case_iii_star_witness(pair.alpha, pair.beta),
    ]
    return [w for w in found if w is not None]


def counterexample_from_strict_rounding(pair: DilationPair) -> Optional[Fraction]:
    """An x with negative commutator, read off the first strict-rounding violation.

    With a' = -alpha, b' = -beta, ``floor(alpha*floor(beta*x)) >= n`` holds exactly
    for ``x > strict_round_down(n, a') / (a'b')`` (and symmetrically for the other
    composition), so a violating n yields x at the right end of the gap.
    """
    ap, bp = -pair.alpha, -pair.beta
    n = strict_rounding_certificate(ap, bp)
    if n is None:
        return None
    return strict_round_down_scaled(n, ap) / (ap * bp)


def _verdict(pair: DilationPair, holds: bool, procedure: Procedure) -> Verdict:
    if holds:
        return Verdict(True, None, 0, Fraction(0), procedure)
    x = counterexample_from_strict_rounding(pair)
    if x is None:
        raise AssertionError(f"no strict-rounding certificate for non-member {pair}")
    return Verdict(False, x, commutator_at(pair, x), x, procedure)


def strict_rounding_verdict(alpha, beta=None) -> Verdict:
    pair = as_pair(alpha, beta)
    holds = strict_rounding_certificate(-pair.alpha, -pair.beta) is None
    return _verdict(pair, holds, Procedure.STRICT_ROUNDING)


def decide(alpha, beta=None) -> tuple[Verdict, list[Witness]]:
    pair = as_pair(alpha, beta)
    found = witnesses(pair)
    return _verdict(pair, bool(found), Procedure.CLASSIFICATION), found


def in_s(alpha, beta=None) -> bool:
    return bool(witnesses(as_pair(alpha, beta)))


def kind_of(alpha, beta=None) -> Kind:
    pair = as_pair(alpha, beta)
    if case_ii_witness(pair) is not None:
        return Kind.CASE_II_SEGMENT
    if case_i_witness(pair) is not None:
        return Kind.CASE_I_CURVE
    if case_iii_star_witness(pair) is not None:
        return Kind.SPORADIC
    return Kind.NOT_IN_S
