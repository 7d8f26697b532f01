"""Intersection theory on quantum ruled surfaces.

Fibers never meet, a fiber meets the section class exactly once, and
the self-intersection of the section is deg E -- independently of the
genus and of the twisting class Q.  The script also prints the
Neron-Severi lattice and sweeps the Hirzebruch-like family.
"""

from kzero import RuledSurface

s = RuledSurface.from_degrees(genus=1, deg_e=-2, deg_q=3)
fib = s.fiber_class()
h = s.section_class()

print(f"surface over {s.base!r} with E = {s.E}, Q = {s.Q}")
print(f"  fiber.fiber = {s.intersect(fib, fib)}")
print(f"  fiber.H     = {s.intersect(fib, h)}")
print(f"  H.fiber     = {s.intersect(h, fib)}")
print(f"  H.H         = {s.intersect(h, h)}    (= deg E)")
print(f"  e-invariant = {s.e_invariant()}")

print("\npushforwards of twists of the structure class:")
for n in range(-4, 4):
    print(f"  Rf_* O({n:+})  ->  {s.structure_class(n).pushforward()}")

lat = s.neron_severi()
print(f"\nrank-zero basis {lat.basis_names} has Euler Gram:")
for row in lat.gram:
    print(f"  {list(row)}")
print(f"radical basis (coordinates): {[list(v) for v in lat.radical_basis]}")
print(f"Neron-Severi basis {lat.ns_basis_names} with intersection Gram:")
for row in lat.ns_gram:
    print(f"  {list(row)}")

print("\nHirzebruch-like family (genus 0, E = O (+) O(-e)):")
for e in range(6):
    f_e = RuledSurface.from_degrees(0, -e, -e)
    print(f"  e = {e}: e-invariant = {f_e.e_invariant()}, "
          f"H.H = {f_e.intersect(f_e.section_class(), f_e.section_class())}")
