"""Order-3 matrices over O_-5 and what distinguishes them.

O_-5 is not a PID, so besides the five principal-family classes there is a
matrix whose norm kernel M_N lies in the nontrivial ideal class.
"""
import random

from quadtorsion.quadring import make_order
from quadtorsion.reiner import (brute_force_conjugate, build_matrix_nonprincipal, compute_invariants,
                                principal_representatives, random_unimodular)

o = make_order(-5)
reps = principal_representatives(5)

print("One representative per unit orbit on O_-5/(3):")
for A in reps:
    print(compute_invariants(A).label())
    print("  " + str(A).replace("\n", "\n  "))

# Invariants survive any change of basis.
rng = random.Random(7)
A = reps[3]
for _ in range(3):
    P = random_unimodular(o, rng)
    B = P * A * P.inverse()
    print("conjugated:", compute_invariants(B).label(), " height", B.height())

print()
print("A and A^2 generate the same subgroup; a conjugator between them:")
P = brute_force_conjugate(A, A * A, 3)
print(P)

print()
print("Distinct representatives are not conjugate by anything of height <= 2:",
      all(brute_force_conjugate(reps[i], reps[j], 2) is None for i in range(5) for j in range(i + 1, 5)))

print()
N = build_matrix_nonprincipal(o(1), o(0), o(0))
print("The nonprincipal construction:")
print(N)
print(compute_invariants(N, allow_partial=True).label(), f"(cube is identity: {N ** 3 == N ** 0})")
