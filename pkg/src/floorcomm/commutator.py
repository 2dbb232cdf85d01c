"""Dilated floor functions, their commutator, and the exact period-scan oracle.

The commutator ``g(x) = floor(a*floor(b*x)) - floor(b*floor(a*x))`` is a step
function whose jumps sit where ``a*x`` or ``b*x`` is an integer, and it repeats
with period ``den(a) * den(b)``.  Sampling every jump point and one interior
point of every step over a single period therefore decides ``g >= 0`` on all
of R without approximation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .exactnum import as_rat


class QuadrantError(ValueError):
    """Raised when a dilation pair is outside the open third quadrant."""


@dataclass(frozen=True)
class DilationPair:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        alpha, beta = as_rat(self.alpha), as_rat(self.beta)
        if alpha >= 0 or beta >= 0:
            raise QuadrantError(
                f"only negative dilations are supported (alpha < 0 and beta < 0), "
                f"got alpha={alpha}, beta={beta}"
            )
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)


def as_pair(pair_or_alpha, beta=None) -> DilationPair:
    if isinstance(pair_or_alpha, DilationPair):
        return pair_or_alpha
    return DilationPair(pair_or_alpha, beta)


class Procedure(enum.Enum):
    ORACLE = "Oracle"
    STRICT_ROUNDING = "StrictRounding"
    TORUS = "Torus"
    CLASSIFICATION = "Classification"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a nonnegativity decision.

    For the oracle, ``min_value``/``argmin`` are the true minimum over a period.
    Other procedures report the commutator at their certificate: 0 at x = 0
    when the relation holds, the (negative) value at the counterexample when
    it fails.
    """

    holds: bool
    counterexample: Optional[Fraction]
    min_value: int
    argmin: Fraction
    procedure: Procedure

    def __post_init__(self):
        if self.holds != (self.counterexample is None) or self.holds != (self.min_value >= 0):
            raise ValueError(f"inconsistent verdict: {self}")


def dilated_floor(a, x) -> int:
    return math.floor(as_rat(a) * as_rat(x))


def commutator_at(pair: DilationPair, x) -> int:
    x = as_rat(x)
    a, b = pair.alpha, pair.beta
    return math.floor(a * math.floor(b * x)) - math.floor(b * math.floor(a * x))


def fundamental_period(pair: DilationPair) -> Fraction:
    """A period T with alpha*T, beta*T and alpha*beta*T all integral."""
    return Fraction(pair.alpha.denominator * pair.beta.denominator)


class _IntScan:
    """Integer-only evaluation of the commutator on the grid x = X / scale."""

    def __init__(self, pair: DilationPair):
        self.a, self.b = -pair.alpha.numerator, pair.alpha.denominator
        self.c, self.d = -pair.beta.numerator, pair.beta.denominator
        self.period = self.b * self.d
        # breakpoints are k*b/a and k*d/c; doubled grid also holds midpoints
        base = math.lcm(self.a, self.c)
        self.scale = 2 * base
        step_a = 2 * self.b * (base // self.a)
        step_c = 2 * self.d * (base // self.c)
        end = self.period * self.scale
        self.breaks = sorted(set(range(0, end, step_a)) | set(range(0, end, step_c)))
        self.end = end

    def parts(self, X: int) -> tuple[int, int, int, int, int]:
        a, b, c, d, s = self.a, self.b, self.c, self.d, self.scale
        fb = (-c * X) // (d * s)
        afb = (-a * fb) // b
        fa = (-a * X) // (b * s)
        bfa = (-c * fa) // d
        return fb, afb, fa, bfa, afb - bfa

    def value(self, X: int) -> int:
        return self.parts(X)[4]

    def midpoints(self) -> list[int]:
        nxt = self.breaks[1:] + [self.end]
        return [(lo + hi) // 2 for lo, hi in zip(self.breaks, nxt)]

    def samples(self) -> list[int]:
        """Breakpoints in ascending order, then interval midpoints."""
        return self.breaks + self.midpoints()


def breakpoints(pair: DilationPair) -> list[Fraction]:
    scan = _IntScan(pair)
    return [Fraction(X, scan.scale) for X in scan.breaks]


def sample_points(pair: DilationPair) -> list[Fraction]:
    scan = _IntScan(pair)
    return [Fraction(X, scan.scale) for X in scan.samples()]


def _scan_min(pair: DilationPair) -> tuple[int, Fraction, Optional[Fraction]]:
    scan = _IntScan(pair)
    best, best_x, first_bad = None, None, None
    for X in scan.samples():
        v = scan.value(X)
        if first_bad is None and v < 0:
            first_bad = X
        if best is None or v < best:
            best, best_x = v, X
    bad = None if first_bad is None else Fraction(first_bad, scan.scale)
    return best, Fraction(best_x, scan.scale), bad


def commutator_min(pair: DilationPair) -> tuple[int, Fraction]:
    """Minimum commutator value over one period and the first x attaining it."""
    value, x, _ = _scan_min(pair)
    return value, x


def verify_nonneg(pair: DilationPair) -> Verdict:
    value, x, bad = _scan_min(pair)
    return Verdict(
        holds=bad is None,
        counterexample=bad,
        min_value=value,
        argmin=x,
        procedure=Procedure.ORACLE,
    )


def trace(pair: DilationPair) -> Iterator[tuple[Fraction, int, int, int, int, int]]:
    """Rows (x, floor(bx), floor(a*floor(bx)), floor(ax), floor(b*floor(ax)), g) in x order."""
    scan = _IntScan(pair)
    for X in sorted(scan.samples()):
        yield (Fraction(X, scan.scale), *scan.parts(X))
