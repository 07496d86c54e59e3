"""Counting conjugacy classes of order-3 subgroups of PGL_3(O_-m).

The count is c * h split into lambda and mu, where c is the number of unit
orbits on O_-m/(3) and h the class number of O_-m[zeta_3].  We build both
factors from scratch for a few m and watch where the orbit number comes
from.
"""
from quadtorsion.classnum import class_number_biquadratic
from quadtorsion.ideals import class_group, galois_orbit_counts
from quadtorsion.reiner import conjugacy_decomposition
from quadtorsion.units import fundamental_unit_quartic, orbit_count, reduction_image

print("Unit images and orbit numbers")
for m in (1, 2, 5, 10, 13, 14, 17, 22, 26, 29):
    img = reduction_image(m)
    data = fundamental_unit_quartic(m)
    print(f"  m={m:>2}  O/(3) is {img.kind:<13}  image of units has {img.order} elements"
          f"  -> {orbit_count(m).count} orbits   (Hasse index {data.hasse_index})")

# m = 10 and 22 sit in the F_9 case.  The orbit number is 1 + 8/|image|, and
# the image always contains -1, so only 2, 3 and 5 can occur there.
print()
print("m=10: image =", [str(r) for r in reduction_image(10).subgroup])

print()
print("Class groups of O_-m[zeta_3] with the Galois action")
for m in (1, 2, 5, 13):
    cg = class_group(m)
    print(f"  m={m:>2}  h={cg.order_h} (formula {class_number_biquadratic(m)})"
          f"  (h_mu, h_lambda) = {galois_orbit_counts(cg)}")

print()
print("Putting it together where O_-m is a PID")
for m in (1, 2, 7, 11, 19):
    cc = conjugacy_decomposition(m)
    print(f"  m={m:>2}  c={cc.c} h={cc.h}  lambda={cc.lam} mu={cc.mu}")
