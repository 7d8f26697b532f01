"""Numerical classes on a curve and their Euler pairing.

The Grothendieck classes this package works with are (rank, degree)
pairs over a smooth projective curve.  This script walks through the
ring structure and checks the four basic Euler pairings against the
genus by hand.
"""

from kzero import curve, euler_form_base

X = curve(2)
print(f"base: {X!r}")

o = X.one            # structure sheaf
p = X.k0(0, 1)       # a point
line = X.k0(1, 3)    # a degree-3 line bundle

print(f"\n[O] = {o},  [O_p] = {p},  [O(3)] = {line}")
print(f"[O(3)] * [O(-1)] = {line * X.k0(1, -1)}   (degrees add)")
print(f"[O_p] * [O_q]    = {p * p}   (disjoint supports: product vanishes)")
print(f"dual of [O(3)] (+) [O(1)]: {(line + X.k0(1, 1)).dual()}")

print("\nEuler pairings (chi of the Hom complex) on a genus-2 curve:")
print(f"  (O, O)    = {euler_form_base(o, o):>3}   expected 1 - g = -1")
print(f"  (O, O_p)  = {euler_form_base(o, p):>3}")
print(f"  (O_p, O)  = {euler_form_base(p, o):>3}")
print(f"  (O_p, O_q)= {euler_form_base(p, p):>3}")

print("\nRiemann-Roch in action: chi(O(d)) = d + 1 - g")
for d in range(-2, 5):
    print(f"  chi(O({d:+})) = {euler_form_base(o, X.k0(1, d))}")
