"""Hilbert-Poincare series of the normalizer contributions.

Each model is a monomial algebra with a diagonal group action; the
invariant dimensions are counted directly and the series read off from one
period.
"""
from quadtorsion.cohomology import (IMAGINARY_MU_PUBLISHED, assemble_report, cyclic_model, dihedral_model,
                                    invariant_dimension, invariant_generator_degrees, series_from_model,
                                    seven_torsion_model)

lam = cyclic_model(3, 1)
mu = dihedral_model(3, 1, True)
print("Z x Z/6:               ", series_from_model(lam, invariant=False).format())
print("(Z x Z/6) x| Z/2:      ", series_from_model(mu).format(),
      " generators in degrees", invariant_generator_degrees(mu))
print("  dims 0..11:", [invariant_dimension(mu, d) for d in range(12)])
print("  published closed form:", IMAGINARY_MU_PUBLISHED, "(twice these dimensions)")

print()
seven = seven_torsion_model()
print("7-torsion over Q(sqrt -7):", series_from_model(seven).format(),
      " generators", invariant_generator_degrees(seven))

print()
for label, kw in (("O_-1", dict(m=1)), ("O_-2", dict(m=2)), ("Q(sqrt 5), l=5", dict(field="sqrt5", ell=5)),
                  ("Q(sqrt 7), l=3", dict(field="sqrt7", ell=3))):
    rep = assemble_report(**kw, degree_range=(0, 8))
    print(f"{label:<16} lambda={rep.lam} mu={rep.mu}  total {rep.series.format()}")
