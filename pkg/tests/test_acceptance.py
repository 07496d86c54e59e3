"""The eight acceptance criteria, one test each.

Each test records a PASS/FAIL line; the lines are printed in the terminal
summary (see conftest.py) and also when this file is run as a script.
"""
import time

import pytest

from quadtorsion.classnum import class_number_biquadratic
from quadtorsion.cohomology import (assemble_report, cyclic_model, dihedral_model, invariant_dimension,
                                    invariant_generator_degrees, series_from_model, seven_torsion_invariants,
                                    seven_torsion_model, tate_dimension)
from quadtorsion.ideals import class_group
from quadtorsion.quadring import PRODUCT, is_squarefree, make_order
from quadtorsion.reiner import (Mat3, admissible_torsion_primes, brute_force_conjugate, build_matrix_nonprincipal,
                                build_matrix_principal, compute_invariants, conjugacy_partition, count_conjugacy_classes,
                                count_pgl_l_z, enumerate_order3, principal_representatives)
from quadtorsion.units import orbit_count, reduction_image

RESULTS = {}


def record(n, ok, detail):
    RESULTS[n] = (ok, detail)
    assert ok, detail


def report_lines():
    return [f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}" for n, (ok, detail) in sorted(RESULTS.items())]


def test_criterion_1_table1():
    t = time.time()
    got = [count_conjugacy_classes(m) for m in (1, 2, 7, 11, 19)]
    dt = time.time() - t
    ok = got == [(0, 2), (0, 4), (0, 3), (0, 4), (0, 3)] and dt < 10
    record(1, ok, f"(lambda, mu) = {got} in {dt:.1f}s")


def test_criterion_2_orbit_tables():
    published = {2: 4, 5: 5, 14: 5, 17: 5, 26: 4, 29: 5, 1: 2, 10: 4, 13: 3, 22: 4}
    t = time.time()
    got = {m: orbit_count(m).count for m in published}
    dt = time.time() - t
    bad = {m: (published[m], got[m]) for m in published if got[m] != published[m]}
    detail = f"{dt:.1f}s; " + ("all match" if not bad else
                               "mismatch (published, computed): " + ", ".join(f"m={m}: {v}" for m, v in bad.items()))
    record(2, not bad and dt < 60, detail)


def test_criterion_3_class_numbers():
    published = {2: 1, 5: 2, 14: 4, 17: 4, 26: 12, 29: 6, 1: 1, 10: 2, 13: 4, 22: 2}
    formula = {m: class_number_biquadratic(m) for m in published}
    t = time.time()
    direct = {m: class_group(m).order_h for m in (1, 2, 5, 10)}
    dt = time.time() - t
    ok = formula == published and all(direct[m] == published[m] for m in direct) and dt < 300
    record(3, ok, f"formula {formula}; direct HNF {direct} in {dt:.1f}s")


def test_criterion_4_unit_images():
    i2, i5 = reduction_image(2), reduction_image(5)
    ok2 = i2.kind == PRODUCT and i2.is_full() and any(r.value == (2, 1) for r in i2.subgroup)
    v5 = sorted(r.value for r in i5.subgroup)
    ok = ok2 and v5 == [(1, 1), (2, 2)]
    record(4, ok, f"m=2 full={i2.is_full()}; m=5 image {v5}")


@pytest.mark.slow
def test_criterion_5_explicit_matrices(rng):
    t = time.time()
    o = make_order(-5)
    I = Mat3.identity(o)

    def q():
        return o(rng.randint(-50, 50), rng.randint(-50, 50))
    cubes = all(build_matrix_principal(q(), q()) ** 3 == I for _ in range(100))
    cubes = cubes and all(build_matrix_nonprincipal(q(), q(), q()) ** 3 == I for _ in range(100))
    reps = principal_representatives(5)
    invs = [compute_invariants(A) for A in reps]
    distinct = len(set(invs)) == 5
    squares = all(brute_force_conjugate(A, A * A, 3) is not None for A in reps)
    apart = all(brute_force_conjugate(reps[i], reps[j], 2) is None
                for i in range(5) for j in range(i + 1, 5))
    dt = time.time() - t
    ok = cubes and distinct and squares and apart and dt < 600
    record(5, ok, f"cubes={cubes} distinct={distinct} square-conjugate={squares} "
                  f"no height<=2 conjugator={apart} in {dt:.1f}s")


@pytest.mark.slow
def test_criterion_6_classification_soundness():
    t = time.time()
    mats = enumerate_order3(make_order(-1), 1)
    part = conjugacy_partition(mats, height=2)
    inv_classes = {}
    for i, A in enumerate(mats):
        inv_classes.setdefault(compute_invariants(A), set()).add(i)
    same = sorted(map(frozenset, part), key=min) == sorted(map(frozenset, inv_classes.values()), key=min)
    dt = time.time() - t
    record(6, same and dt < 900, f"{len(mats)} matrices; oracle classes {sorted(len(p) for p in part)}, "
                                 f"invariant classes {sorted(len(c) for c in inv_classes.values())} in {dt:.1f}s")


def _expand_seven(n):
    # (1 + T^5)(1 + T^2)/(1 - T^6) = (1 + T^2 + T^5 + T^7) * sum T^(6k)
    num = {0: 1, 2: 1, 5: 1, 7: 1}
    return [sum(c for e, c in num.items() if e <= d and (d - e) % 6 == 0) for d in range(n)]


def test_criterion_7_cohomology_series():
    seven = [seven_torsion_invariants(d) for d in range(25)] == _expand_seven(25)
    gens = invariant_generator_degrees(dihedral_model(3, 1, True)) == [2, 3, 3, 4]
    models = [cyclic_model(3, 1), cyclic_model(3, 2), dihedral_model(3, 1, True), dihedral_model(3, 2, False),
              dihedral_model(5, 2, False), seven_torsion_model()]
    consistent = True
    for mdl in models:
        inv = mdl.group_order > 1
        s = series_from_model(mdl, inv)
        dim = invariant_dimension if inv else tate_dimension
        consistent &= all(s.coefficient(d) == dim(mdl, d)
                          for d in range(mdl.series_start, mdl.series_start + 4 * s.period))
    reported = any("factor 2" in n for n in assemble_report(1).notes)
    ok = seven and gens and consistent and reported
    record(7, ok, f"7-torsion={seven} generators={gens} series/dims={consistent} factor-2 note={reported}")


def test_criterion_8_small_fields():
    r5 = assemble_report(field="sqrt5", ell=5)
    pgl = count_pgl_l_z(5)
    no5 = all(5 not in admissible_torsion_primes(make_order(-m)) for m in range(1, 500) if is_squarefree(m))
    ok = r5.copies == 2 and pgl == 2 and no5
    record(8, ok, f"Q(sqrt5)/l=5 components={r5.copies} count_pgl_l_z(5)={pgl} 5 never admissible={no5}")


if __name__ == "__main__":
    import random
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for f in tests:
        try:
            f(random.Random(20240611)) if f is test_criterion_5_explicit_matrices else f()
        except AssertionError:
            pass
    print("\n".join(report_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
