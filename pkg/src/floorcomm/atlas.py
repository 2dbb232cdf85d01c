"""Enumeration of the solution set inside a rational window, and SVG rendering.

Features are produced in any of the four coordinate frames.  Curves and
segments carry the two continuous families; the sporadic rational points
are the members lying on neither.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .classifier import (
    Frame,
    Kind,
    beta_from_params,
    from_frame,
    kind_of,
    to_frame,
    witnesses,
)
from .exactnum import as_rat

CURVE = "CurveCaseI"
SEGMENT = "SegmentCaseII"
SPORADIC = "SporadicPoint"


@dataclass(frozen=True)
class AtlasWindow:
    frame: Frame
    xmin: Fraction
    xmax: Fraction
    ymin: Fraction
    ymax: Fraction
    max_denominator: int = 8
    max_index: int = 8

    def __post_init__(self):
        frame = self.frame if isinstance(self.frame, Frame) else Frame(self.frame)
        object.__setattr__(self, "frame", frame)
        for name in ("xmin", "xmax", "ymin", "ymax"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise ValueError("window needs xmin < xmax and ymin < ymax")
        if self.max_denominator < 1 or self.max_index < 1:
            raise ValueError("max_denominator and max_index must be positive")
        if frame is Frame.AB and (self.xmin >= 0 or self.ymin >= 0):
            raise ValueError("an (alpha, beta) window must reach into the negative quadrant")
        if frame is not Frame.AB and (self.xmax <= 0 or self.ymax <= 0):
            raise ValueError(f"a {frame.value} window must reach into the positive quadrant")

    def contains(self, x, y) -> bool:
        return self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax

    def abscissae(self) -> list[Fraction]:
        """Rationals in [xmin, xmax] with denominator at most max_denominator."""
        out = set()
        for den in range(1, self.max_denominator + 1):
            for num in range(math.ceil(self.xmin * den), math.floor(self.xmax * den) + 1):
                out.add(Fraction(num, den))
        return sorted(out)


PRIMED_WINDOW = AtlasWindow(Frame.PRIMED, Fraction(0), Fraction(8, 5), Fraction(0), Fraction(6, 5))
SIGMATAU_WINDOW = AtlasWindow(Frame.SIGMATAU, Fraction(0), Fraction(1), Fraction(0), Fraction(1))


@dataclass
class SolutionFeature:
    """A curve, segment or isolated point of the solution set.

    ``points`` are in window coordinates (drawing geometry); ``samples`` are
    (alpha, beta) pairs lying on the feature, each of which is a member.
    """

    kind: str
    params: dict
    points: list[tuple[Fraction, Fraction]]
    samples: list[tuple[Fraction, Fraction]] = field(default_factory=list)

    def key(self) -> tuple:
        return (self.kind, tuple(sorted((k, str(v)) for k, v in self.params.items())))

    def as_dict(self) -> dict:
        params = {}
        for k, v in self.params.items():
            params[k] = str(v) if isinstance(v, Fraction) else v
        return {
            "kind": self.kind,
            "params": params,
            "points": [[str(x), str(y)] for x, y in self.points],
        }


# -- case (i) ----------------------------------------------------------------

def _case_i_ordinate(frame: Frame, m: int, n: int, X: Fraction) -> Optional[Fraction]:
    """Second coordinate of the curve m/mu' + n/nu' = 1 above abscissa X, if defined."""
    if frame is Frame.AB:
        return X / (n - m * X) if X < 0 else None
    if X <= 0:
        return None
    if frame is Frame.PRIMED:
        return X / (n + m * X)
    if frame is Frame.MUV:
        return n * X / (X - m) if X > m else None
    if frame is Frame.SIGMATAU:
        y = (1 - m * X) / n
        return y if y > 0 else None
    raise ValueError(frame)


def enumerate_case_i(window: AtlasWindow) -> list[SolutionFeature]:
    xs = window.abscissae()
    out = []
    for m in range(window.max_index + 1):
        for n in range(1, window.max_index + 1):
            pts = []
            for X in xs:
                Y = _case_i_ordinate(window.frame, m, n, X)
                if Y is not None and window.contains(X, Y):
                    pts.append((X, Y))
            if pts:
                samples = [from_frame(window.frame, x, y) for x, y in pts]
                out.append(SolutionFeature(CURVE, {"m": m, "n": n}, pts, samples))
    return out


# -- case (ii) ----------------------------------------------------------------

def _clip(lo, lo_open, hi, hi_open, coords, window: AtlasWindow):
    """Clip a parametrized line s -> (x0 + x1*s, y0 + y1*s), s in the given interval.

    ``hi`` may be None for an unbounded ray.  Returns (lo, hi) or None.
    """
    bounds = ((window.xmin, window.xmax), (window.ymin, window.ymax))
    for (c0, c1), (wlo, whi) in zip(coords, bounds):
        if c1 == 0:
            if not wlo <= c0 <= whi:
                return None
            continue
        a, b = (wlo - c0) / c1, (whi - c0) / c1
        if a > b:
            a, b = b, a
        if a > lo:
            lo, lo_open = a, False
        if hi is None or b < hi:
            hi, hi_open = b, False
    if hi is None or lo > hi or (lo == hi and (lo_open or hi_open)):
        return None
    return lo, lo_open, hi, hi_open


def _segment_line(frame: Frame, p: int, q: int):
    """(interval, coordinate maps) of the case-(ii) set for alpha = -q/p."""
    inv_p = Fraction(1, p)
    if frame is Frame.AB:
        return (-inv_p, False, Fraction(0), True), ((Fraction(-q, p), 0), (0, 1))
    if frame is Frame.PRIMED:
        return (Fraction(0), True, inv_p, False), ((Fraction(q, p), 0), (0, 1))
    if frame is Frame.MUV:
        return (Fraction(p), False, None, True), ((0, 1), (0, Fraction(q, p)))
    if frame is Frame.SIGMATAU:
        return (Fraction(0), True, inv_p, False), ((0, 1), (0, Fraction(p, q)))
    raise ValueError(frame)


def enumerate_case_ii(window: AtlasWindow) -> list[SolutionFeature]:
    D = window.max_denominator
    out = []
    for p in range(1, D + 1):
        for q in range(1, D + 1):
            if math.gcd(p, q) != 1:
                continue
            (lo, lo_open, hi, hi_open), coords = _segment_line(window.frame, p, q)
            clipped = _clip(lo, lo_open, hi, hi_open, coords, window)
            if clipped is None:
                continue
            lo, lo_open, hi, hi_open = clipped

            def at(s, coords=coords):
                return tuple(c0 + c1 * s for c0, c1 in coords)

            pts = [at(lo), at(hi)]
            params = [s for s, is_open in ((lo, lo_open), (hi, hi_open)) if not is_open]
            params.append((lo + hi) / 2)
            samples = [from_frame(window.frame, *at(s)) for s in params]
            out.append(SolutionFeature(SEGMENT, {"p": p, "q": q}, pts, samples))
    return out


# -- sporadic points --------------------------------------------------------------

def enumerate_sporadic(p: int, q: int, window: AtlasWindow) -> list[SolutionFeature]:
    """Sporadic points on alpha = -q/p, sorted by beta descending."""
    if p < 1 or q < 1 or math.gcd(p, q) != 1:
        raise ValueError(f"p, q must be coprime positive integers, got {p}, {q}")
    K = window.max_index
    alpha = Fraction(-q, p)
    betas = set()
    for m in range(K + 1):
        for n in range(1, K + 1):
            if Fraction(m, p) + Fraction(n, q) >= 1:
                continue
            for r in range(2, K + 1):
                betas.add(beta_from_params(p, q, m, n, r))
    out = []
    for beta in sorted(betas, reverse=True):
        x, y = to_frame(window.frame, alpha, beta)
        if not window.contains(x, y) or kind_of(alpha, beta) is not Kind.SPORADIC:
            continue
        params = {
            "alpha": alpha,
            "beta": beta,
            "witnesses": [w.as_dict() for w in witnesses(alpha, beta)],
        }
        out.append(SolutionFeature(SPORADIC, params, [(x, y)], [(alpha, beta)]))
    return out


def sporadic_betas(p: int, q: int, window: AtlasWindow) -> list[Fraction]:
    return [f.params["beta"] for f in enumerate_sporadic(p, q, window)]


def enumerate_all(window: AtlasWindow) -> list[SolutionFeature]:
    """Curves, segments and sporadic points for all p, q <= max_denominator."""
    features = enumerate_case_i(window) + enumerate_case_ii(window)
    D = window.max_denominator
    for p in range(1, D + 1):
        for q in range(1, D + 1):
            if math.gcd(p, q) == 1:
                features.extend(enumerate_sporadic(p, q, window))
    return features


def limit_sequence(p: int, q: int, m: int, n: int, r_max: int) -> list[Fraction]:
    """beta(p, q, m, n, r) for r = 1..r_max; increases towards -1/p."""
    if Fraction(m, p) + Fraction(n, q) >= 1:
        raise ValueError("limit sequences need m/p + n/q < 1")
    return [beta_from_params(p, q, m, n, r) for r in range(1, r_max + 1)]


# -- rendering -----------------------------------------------------------------

_AXIS_LABELS = {
    Frame.AB: ("alpha", "beta"),
    Frame.PRIMED: ("alpha' = -alpha", "beta' = -beta"),
    Frame.MUV: ("mu' = -1/beta", "nu' = alpha/beta"),
    Frame.SIGMATAU: ("sigma' = -beta", "tau' = beta/alpha"),
}

_WIDTH, _HEIGHT, _MARGIN = 640, 480, 48


def _fmt(v: Fraction) -> str:
    # render-only rounding to a fixed grid; decisions never see these values
    return f"{round(v * 100) / 100:.2f}"


def render_svg(features: list[SolutionFeature], window: AtlasWindow) -> str:
    w, h, mg = _WIDTH, _HEIGHT, _MARGIN
    sx = Fraction(w - 2 * mg) / (window.xmax - window.xmin)
    sy = Fraction(h - 2 * mg) / (window.ymax - window.ymin)

    def px(x):
        return _fmt(mg + (x - window.xmin) * sx)

    def py(y):
        return _fmt(h - mg - (y - window.ymin) * sy)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>',
        f'<rect x="{mg}" y="{mg}" width="{w - 2 * mg}" height="{h - 2 * mg}" '
        'fill="none" stroke="#000000" stroke-width="1"/>',
    ]
    lines.append('<g class="ticks" stroke="#000000" font-family="sans-serif" font-size="11">')
    for k in range(math.ceil(window.xmin), math.floor(window.xmax) + 1):
        x = px(Fraction(k))
        lines.append(f'<line x1="{x}" y1="{h - mg}" x2="{x}" y2="{h - mg + 5}"/>')
        lines.append(f'<text x="{x}" y="{h - mg + 18}" text-anchor="middle" stroke="none">{k}</text>')
    for k in range(math.ceil(window.ymin), math.floor(window.ymax) + 1):
        y = py(Fraction(k))
        lines.append(f'<line x1="{mg - 5}" y1="{y}" x2="{mg}" y2="{y}"/>')
        lines.append(f'<text x="{mg - 8}" y="{y}" text-anchor="end" stroke="none">{k}</text>')
    lines.append("</g>")
    xl, yl = _AXIS_LABELS[window.frame]
    lines.append(
        f'<text x="{w // 2}" y="{h - 8}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">{xl}</text>'
    )
    lines.append(
        f'<text x="14" y="{h // 2}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="12" transform="rotate(-90 14 {h // 2})">{yl}</text>'
    )

    for f in features:
        if f.kind == CURVE:
            color = "#1f4fd8" if f.params["m"] == 0 else "#1a9a3a"
            coords = " ".join(f"{px(x)},{py(y)}" for x, y in f.points)
            lines.append(
                f'<polyline class="case-i" data-m="{f.params["m"]}" data-n="{f.params["n"]}" '
                f'points="{coords}" fill="none" stroke="{color}" stroke-width="1.2"/>'
            )
    for f in features:
        if f.kind == SEGMENT:
            (x1, y1), (x2, y2) = f.points
            lines.append(
                f'<line class="case-ii" data-p="{f.params["p"]}" data-q="{f.params["q"]}" '
                f'x1="{px(x1)}" y1="{py(y1)}" x2="{px(x2)}" y2="{py(y2)}" '
                'stroke="#d62728" stroke-width="1.2"/>'
            )
    for f in features:
        if f.kind == SPORADIC:
            (x, y), = f.points
            lines.append(
                f'<circle class="sporadic" data-alpha="{f.params["alpha"]}" '
                f'data-beta="{f.params["beta"]}" cx="{px(x)}" cy="{py(y)}" r="2.2" fill="#d62728"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
