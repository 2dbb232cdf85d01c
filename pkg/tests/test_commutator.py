import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import negative_rationals, rationals
from floorcomm.commutator import (
    DilationPair,
    Procedure,
    QuadrantError,
    Verdict,
    breakpoints,
    commutator_at,
    commutator_min,
    dilated_floor,
    fundamental_period,
    sample_points,
    trace,
    verify_nonneg,
)

pairs = st.builds(DilationPair, negative_rationals(max_den=9), negative_rationals(max_den=9))


@pytest.mark.parametrize("a, x, expected", [(F(-3, 2), 1, -2), (-1, 0, 0), (F(-6, 11), 22, -12)])
def test_dilated_floor(a, x, expected):
    assert dilated_floor(a, x) == expected


@pytest.mark.parametrize(
    "alpha, beta, x, expected",
    [(F(-3, 2), -1, 1, -1), (F(-1, 2), F(-1, 2), F(5, 7), 0), (F(-3, 2), F(-6, 11), 1, 0)],
)
def test_commutator_at(alpha, beta, x, expected):
    assert commutator_at(DilationPair(alpha, beta), x) == expected


@pytest.mark.parametrize(
    "alpha, beta, expected", [(F(-3, 2), F(-6, 11), 22), (-1, -1, 1), (-2, F(-1, 3), 3)]
)
def test_fundamental_period(alpha, beta, expected):
    assert fundamental_period(DilationPair(alpha, beta)) == expected


@pytest.mark.parametrize(
    "alpha, beta, expected",
    [
        (-1, -1, [0]),
        (F(-1, 2), F(-1, 3), [0, 2, 3, 4]),
        (F(-3, 2), -1, [0, F(2, 3), 1, F(4, 3)]),
    ],
)
def test_breakpoints(alpha, beta, expected):
    assert breakpoints(DilationPair(alpha, beta)) == expected


def test_verify_nonneg_examples():
    assert verify_nonneg(DilationPair(F(-3, 2), F(-6, 11))).holds
    assert verify_nonneg(DilationPair(-2, -1)).holds
    bad = verify_nonneg(DilationPair(F(-3, 2), -1))
    assert (bad.holds, bad.counterexample, bad.min_value) == (False, 1, -1)
    assert bad.procedure is Procedure.ORACLE


def test_commutator_min_examples():
    assert commutator_min(DilationPair(-1, -1)) == (0, 0)
    assert commutator_min(DilationPair(F(-3, 2), -1)) == (-1, 1)
    value, x = commutator_min(DilationPair(F(-3, 2), F(-6, 11)))
    assert value == 0 and 0 <= x < 22


@pytest.mark.parametrize("alpha, beta", [(0, -1), (-1, 0), (F(1, 2), F(1, 2)), (-1, 2)])
def test_quadrant_rejected(alpha, beta):
    with pytest.raises(QuadrantError):
        DilationPair(alpha, beta)


def test_verdict_rejects_inconsistency():
    with pytest.raises(ValueError):
        Verdict(True, F(1), -1, F(1), Procedure.ORACLE)
    with pytest.raises(ValueError):
        Verdict(False, None, 0, F(0), Procedure.ORACLE)


def test_trace_rows_are_sorted_and_consistent():
    pair = DilationPair(F(-3, 2), -1)
    rows = list(trace(pair))
    xs = [r[0] for r in rows]
    assert xs == sorted(xs) and len(xs) == len(sample_points(pair))
    for x, fb, afb, fa, bfa, g in rows:
        assert fb == dilated_floor(pair.beta, x)
        assert afb == dilated_floor(pair.alpha, fb)
        assert fa == dilated_floor(pair.alpha, x)
        assert bfa == dilated_floor(pair.beta, fa)
        assert g == commutator_at(pair, x)


@given(pairs, rationals(-50, 50))
def test_periodicity(pair, x):
    T = fundamental_period(pair)
    assert (pair.alpha * T).denominator == 1
    assert (pair.beta * T).denominator == 1
    assert (pair.alpha * pair.beta * T).denominator == 1
    assert commutator_at(pair, x + T) == commutator_at(pair, x)


@given(pairs)
def test_zero_at_origin(pair):
    assert commutator_at(pair, 0) == 0


@given(pairs, st.data())
def test_piecewise_constant_between_breakpoints(pair, data):
    bps = breakpoints(pair) + [fundamental_period(pair)]
    i = data.draw(st.integers(0, len(bps) - 2))
    lo, hi = bps[i], bps[i + 1]
    t1, t2 = data.draw(st.fractions(0, 1, max_denominator=50)), data.draw(st.fractions(0, 1, max_denominator=50))
    x1, x2 = lo + (hi - lo) * t1, lo + (hi - lo) * t2
    if lo < x1 < hi and lo < x2 < hi:
        assert commutator_at(pair, x1) == commutator_at(pair, x2)


@given(pairs)
def test_min_matches_all_samples(pair):
    value, x = commutator_min(pair)
    assert commutator_at(pair, x) == value
    assert all(commutator_at(pair, s) >= value for s in sample_points(pair))


@given(pairs)
@settings(max_examples=60)
def test_oracle_completeness(pair):
    verdict = verify_nonneg(pair)
    if not verdict.holds:
        assert commutator_at(pair, verdict.counterexample) < 0
        assert oracles.g(pair.alpha, pair.beta, verdict.counterexample) < 0
        return
    T = fundamental_period(pair)
    rng = random.Random(str(pair))
    for x in oracles.random_rationals(rng, -T, 2 * T, 300):
        assert oracles.g(pair.alpha, pair.beta, x) >= 0


@pytest.mark.parametrize("alpha, beta", [(F(-3, 2), F(-6, 11)), (F(-1, 2), F(-1, 2)), (-2, -1), (F(-2, 3), F(-4, 9))])
def test_oracle_completeness_dense(alpha, beta):
    pair = DilationPair(alpha, beta)
    assert verify_nonneg(pair).holds
    T = fundamental_period(pair)
    rng = random.Random(0)
    assert all(oracles.g(alpha, beta, x) >= 0 for x in oracles.random_rationals(rng, -T, 2 * T, 10_000))
