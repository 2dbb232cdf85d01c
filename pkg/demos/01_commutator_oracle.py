"""Scan the commutator floor(a*floor(b*x)) - floor(b*floor(a*x)) over one period.

For rational dilations the commutator is a periodic step function, so the
breakpoints of one period plus one point inside each gap settle the sign
for every real x.
"""

from fractions import Fraction

from floorcomm import DilationPair, breakpoints, commutator_at, fundamental_period, verify_nonneg

for alpha, beta in [(Fraction(-3, 2), Fraction(-1)), (Fraction(-3, 2), Fraction(-6, 11))]:
    pair = DilationPair(alpha, beta)
    T = fundamental_period(pair)
    verdict = verify_nonneg(pair)
    print(f"alpha={alpha}, beta={beta}: period {T}, {len(breakpoints(pair))} breakpoints")
    if verdict.holds:
        print("  the commutator is nonnegative everywhere")
    else:
        x = verdict.counterexample
        print(f"  fails at x={x}: commutator {commutator_at(pair, x)}, minimum {verdict.min_value}")

# by hand at x = 1: floor(-3/2 * floor(-1)) = floor(3/2) = 1 and floor(-1 * floor(-3/2)) = 2
print("hand check at x=1:", commutator_at(DilationPair(Fraction(-3, 2), -1), 1))
