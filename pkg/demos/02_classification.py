"""Decide membership through the three witness families and compare with the scan."""

from fractions import Fraction

from floorcomm import decide, kind_of, to_frames, verify_nonneg, DilationPair

examples = [
    (Fraction(-1, 2), Fraction(-1, 2)),   # on the diagonal and on a segment
    (Fraction(-3, 2), Fraction(-3, 5)),   # a case-(i) curve
    (Fraction(-3, 2), Fraction(-1, 3)),   # a case-(ii) segment
    (Fraction(-3, 2), Fraction(-6, 11)),  # a sporadic point
    (Fraction(-3, 2), Fraction(-1)),      # not a member
]

for alpha, beta in examples:
    verdict, found = decide(alpha, beta)
    scan = verify_nonneg(DilationPair(alpha, beta)).holds
    print(f"({alpha}, {beta}): {kind_of(alpha, beta).value:14s} scan agrees: {verdict.holds == scan}")
    for w in found:
        print("    witness", w)
    print("    (mu', nu') =", tuple(str(c) for c in to_frames(alpha, beta).muv))
