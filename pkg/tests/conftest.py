import sys
from fractions import Fraction
from math import gcd
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))


def grid_pairs(bound: int = 8) -> list[tuple[Fraction, Fraction]]:
    """All reduced (-a/b, -c/d) with 1 <= a, b, c, d <= bound."""
    values = sorted({Fraction(-a, b) for a in range(1, bound + 1) for b in range(1, bound + 1)})
    return [(a, b) for a in values for b in values]


def coprime_pairs(bound: int):
    return [(p, q) for p in range(1, bound + 1) for q in range(1, bound + 1) if gcd(p, q) == 1]


def rationals(min_value=None, max_value=None, max_den: int = 60):
    return st.fractions(min_value=min_value, max_value=max_value, max_denominator=max_den)


def negative_rationals(max_den: int = 12, lo: int = -6):
    return st.fractions(min_value=lo, max_value=0, max_denominator=max_den).filter(lambda x: x < 0)


def positive_rationals(max_den: int = 12, hi: int = 6):
    return st.fractions(min_value=0, max_value=hi, max_denominator=max_den).filter(lambda x: x > 0)


@pytest.fixture(scope="session")
def grid():
    return grid_pairs()
