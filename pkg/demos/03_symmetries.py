"""Membership-preserving maps, and how they manufacture sporadic points.

On the line alpha = -3/2 the case-(i) point beta = -3/5 is pushed by
phi_2^r towards the fixed point -1/2; every image with r >= 2 is a member
that lies on no curve and no segment.
"""

from fractions import Fraction

from floorcomm import in_s, kind_of
from floorcomm.symmetry import PhiMap, phi_orbit, psi, scale_alpha_symmetry, scale_both_symmetry

alpha, seed = Fraction(-3, 2), Fraction(-3, 5)
for r, beta in zip(range(1, 7), phi_orbit(2, seed, range(1, 7))):
    print(f"phi_2^{r}({seed}) = {str(beta):>8}  {kind_of(alpha, beta).value}")

print("phi_2^2 o phi_2^3 == phi_2^6:", PhiMap(2, 2)(PhiMap(2, 3)(seed)) == PhiMap(2, 6)(seed))
print("in mu' = -1/beta coordinates phi_2^2 is affine:", psi(2, 2, Fraction(5, 3)), "= -1/(-6/11)")

for image in (scale_alpha_symmetry(alpha, seed, 3), scale_both_symmetry(alpha, seed, 3)):
    print("image", tuple(str(c) for c in image), "member:", in_s(*image))
