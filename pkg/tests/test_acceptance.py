"""Acceptance criteria 1-8.

Each check prints one ``PASS``/``FAIL`` line with its tolerance.  Run with
``pytest tests/test_acceptance.py -v`` or directly as a script.
"""

import random
import sys
import time
from fractions import Fraction as F
from math import gcd
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import grid_pairs  # noqa: E402
from floorcomm.atlas import PRIMED_WINDOW, limit_sequence, sporadic_betas  # noqa: E402
from floorcomm.classifier import (  # noqa: E402
    beta_from_params,
    case_iii_star_witness,
    decide,
    in_s,
    to_frames,
)
from floorcomm.commutator import DilationPair, commutator_at, verify_nonneg  # noqa: E402
from floorcomm.exactnum import lowest_terms_neg  # noqa: E402
from floorcomm.geometry import (  # noqa: E402
    in_punctured_diagonal,
    lattice_disjoint_punctured,
    punctured_by_rounding,
    punctured_by_strict_rounding,
    region_contains,
    RegionId,
    strict_rounding_criterion,
    torus_criterion,
)
from floorcomm.symmetry import PhiMap, scale_alpha_symmetry, scale_both_symmetry  # noqa: E402

import oracles  # noqa: E402

SEED = 20261016


def criterion_1():
    t0 = time.perf_counter()
    pairs = grid_pairs(8)
    bad = []
    for a, b in pairs:
        fr = to_frames(a, b)
        votes = (
            verify_nonneg(DilationPair(a, b)).holds,
            strict_rounding_criterion(*fr.primed),
            torus_criterion(*fr.sigmatau),
            lattice_disjoint_punctured(*fr.muv),
            decide(a, b)[0].holds,
        )
        if len(set(votes)) != 1:
            bad.append((a, b, votes))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 120
    return ok, f"{len(pairs)} pairs, {len(bad)} disagreements, {dt:.1f}s (exact booleans, < 120s)"


def criterion_2():
    want_32 = {F(6, 11), F(9, 14), F(9, 16), F(9, 17), F(12, 23), F(15, 29)}
    want_23 = {F(4, 9), F(8, 21), F(10, 27), F(4, 11), F(6, 17), F(8, 23), F(10, 29)}
    got_32 = {-b for b in sporadic_betas(2, 3, PRIMED_WINDOW)}
    got_23 = {-b for b in sporadic_betas(3, 2, PRIMED_WINDOW)}
    miss = sorted(want_32 - got_32) + sorted(want_23 - got_23)
    return not miss, f"missing {[str(m) for m in miss]} (exact containment)"


def criterion_3():
    verdict, found = decide(F(-3, 2), -1)
    oracle = verify_nonneg(DilationPair(F(-3, 2), -1))
    by_hand = oracles.g(F(-3, 2), F(-1), F(1))
    ok = (
        not verdict.holds
        and not found
        and oracle.counterexample == 1
        and oracle.min_value == -1
        and commutator_at(DilationPair(F(-3, 2), -1), 1) == -1 == by_hand
    )
    return ok, f"decide={verdict.holds}, oracle x={oracle.counterexample} value={oracle.min_value} (exact)"


def criterion_4():
    count, bad = 0, []
    for p in range(1, 6):
        for q in range(1, 6):
            if gcd(p, q) != 1:
                continue
            for m in range(0, 5):
                for n in range(1, 5):
                    for r in range(1, 5):
                        count += 1
                        beta = beta_from_params(p, q, m, n, r)
                        w = case_iii_star_witness(F(-q, p), beta)
                        if w is None or beta_from_params(w.p, w.q, w.m, w.n, w.r) != beta:
                            bad.append((p, q, m, n, r))
    return not bad, f"{count} parameter tuples, {len(bad)} failures (exact)"


def criterion_5():
    members = [(a, b) for a, b in grid_pairs(8) if decide(a, b)[0].holds]
    bad = []
    for a, b in members:
        p, _ = lowest_terms_neg(a)
        images = [scale_alpha_symmetry(a, b, m) for m in (2, 3)]
        images += [scale_both_symmetry(a, b, m) for m in (2, 3)]
        images += [(a, PhiMap(p, r)(b)) for r in (2, 3)]
        bad += [(a, b, img) for img in images if not decide(*img)[0].holds]
    return not bad, f"{len(members)} members x 6 images, {len(bad)} lost (exact)"


def criterion_6():
    rng = random.Random(SEED)
    betas = [F(-rng.randint(1, 400), rng.randint(1, 60)) for _ in range(100)]
    bad = 0
    for beta in betas:
        for p in range(1, 6):
            for r in range(1, 5):
                for s in range(1, 5):
                    if PhiMap(p, r)(PhiMap(p, s)(beta)) != PhiMap(p, r * s)(beta):
                        bad += 1
    fixed = all(
        PhiMap(p, r)(F(-1, p)) == F(-1, p) and PhiMap(p, r)(F(0)) == 0
        for p in range(1, 6)
        for r in range(1, 5)
    )
    return bad == 0 and fixed, f"{len(betas)} betas x 80 (p, r, s), {bad} mismatches, fixed points {fixed} (exact)"


def criterion_7():
    seq = limit_sequence(2, 3, 1, 1, 64)
    increasing = all(x < y for x, y in zip(seq, seq[1:]))
    members = all(decide(F(-3, 2), b)[0].holds for b in seq)
    gap = abs(seq[-1] + F(1, 2))
    close = gap < F(1, 64) * F(1, 2)
    return increasing and members and close, (
        f"increasing={increasing}, all members={members}, |last + 1/2| = {gap} < 1/128: {close}"
    )


def criterion_8():
    rng = random.Random(SEED)
    xs = oracles.random_rationals(rng, F(-25), F(25), 10_000, max_den=16)
    ys = oracles.random_rationals(rng, F(-25), F(25), 10_000, max_den=16)
    # push half of the points onto or next to the diagonal, where the forms could diverge
    for i in range(0, 10_000, 2):
        ys[i] = xs[i] + F(rng.randint(-16, 16), 16)
    bad = sum(
        1
        for x, y in zip(xs, ys)
        if not in_punctured_diagonal(x, y) == punctured_by_rounding(x, y) == punctured_by_strict_rounding(x, y)
    )
    d_prime = RegionId.PUNCTURED_DIAGONAL
    witness = region_contains(d_prime, (1, F(1, 2))) and not region_contains(d_prime, (F(1, 2), 1))
    return bad == 0 and witness, f"10000 points, {bad} disagreements, reflection witness {witness} (exact)"


CRITERIA = {
    1: ("five-way criterion agreement on the 8x8 grid", criterion_1),
    2: ("reference sporadic dots reproduced", criterion_2),
    3: ("named counterexample (-3/2, -1)", criterion_3),
    4: ("forward/backward witness round-trip", criterion_4),
    5: ("symmetry preservation suite", criterion_5),
    6: ("semigroup law and fixed points", criterion_6),
    7: ("closure-limit sequence", criterion_7),
    8: ("three D' formulations agree", criterion_8),
}


def _report(number: int) -> tuple[bool, str]:
    title, check = CRITERIA[number]
    ok, detail = check()
    return ok, f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}: {detail}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = _report(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_report(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
