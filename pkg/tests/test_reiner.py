import itertools
import random

import pytest

from quadtorsion.errors import InvalidInput, UnsupportedCase
from quadtorsion.quadring import PRODUCT, make_order
from quadtorsion.reiner import (Mat3, NormOperator, ReinerInvariants, admissible_torsion_primes,
                                brute_force_conjugate, build_matrix_nonprincipal, build_matrix_principal,
                                check_theorem_hypotheses, compute_invariants, conjugacy_decomposition,
                                count_conjugacy_classes, count_pgl_l_z, elementary, enumerate_order3,
                                format_matrices, matrix_order, normalizer_descriptor, parse_entry,
                                parse_matrices, principal_representatives, random_unimodular,
                                rank_minus_one_mod3)

o5 = make_order(-5)


def rand_q(o, rng, h=20):
    return o(rng.randint(-h, h), rng.randint(-h, h))


def test_matrix_order_examples():
    I = Mat3.identity(o5)
    assert matrix_order(I) == 1
    assert matrix_order(Mat3.build([[1, 0, 0], [0, 1, 0], [0, 0, -1]], o5)) == 2
    assert matrix_order(build_matrix_principal(o5(3, 1), o5(-2, 5))) == 3


def test_principal_family_cubes_to_identity(rng):
    I = Mat3.identity(o5)
    for _ in range(100):
        A = build_matrix_principal(rand_q(o5, rng), rand_q(o5, rng))
        assert A ** 3 == I and A != I


def test_nonprincipal_family_cubes_to_identity(rng):
    I = Mat3.identity(o5)
    for _ in range(100):
        A = build_matrix_nonprincipal(rand_q(o5, rng), rand_q(o5, rng), rand_q(o5, rng))
        assert A ** 3 == I and A != I and A.det() == o5(1)
    with pytest.raises(UnsupportedCase):
        build_matrix_nonprincipal(make_order(-2)(0), make_order(-2)(0), make_order(-2)(0))


def test_nonprincipal_module_basis():
    # the three vectors (-3 zeta, 0, -2), (0, 1, 0), ((1 - s) zeta, 0, 1 - s) with zeta acting by A
    A = build_matrix_nonprincipal(o5(0), o5(0), o5(0))
    inv = compute_invariants(A, allow_partial=True)
    assert inv.det_class == 1 and inv.c_orbit is None
    with pytest.raises(UnsupportedCase):
        compute_invariants(A)


def test_norm_operator_kills_fixed_complement():
    A = build_matrix_principal(o5(1), o5(0))
    N = NormOperator.of(A).matrix
    assert (A - Mat3.identity(o5)) * N == Mat3.build([[0] * 3] * 3, o5)


def test_elementary_conjugation_reduces_b():
    rng = random.Random(3)
    for _ in range(20):
        a, b = rand_q(o5, rng, 5), rand_q(o5, rng, 5)
        A = build_matrix_principal(a, b)
        # conjugating by e_13(b) e_23(0) gives the family member (a + b, 0)
        P = elementary(1, 3, b)
        B = P * A * P.inverse()
        assert B == build_matrix_principal(a + b, o5(0))
        assert compute_invariants(A) == compute_invariants(B)


def test_invariants_examples_m5():
    A0 = build_matrix_principal(o5(0), o5(0))
    A1 = build_matrix_principal(o5(1), o5(0))
    i0, i1 = compute_invariants(A0), compute_invariants(A1)
    assert i0.c_orbit.is_zero() and i0.det_class == 0
    assert i1.c_orbit.value == (1, 1)
    assert (i0.r, i0.s) == (1, 1)


def test_five_representatives_distinct():
    reps = principal_representatives(5)
    assert len(reps) == 5
    invs = [compute_invariants(A) for A in reps]
    assert len(set(invs)) == 5


@pytest.mark.parametrize("m", [1, 2, 5, 7, 10])
def test_invariants_conjugation_invariant(m, rng):
    o = make_order(-m)
    for A in principal_representatives(m):
        inv = compute_invariants(A)
        for _ in range(5):
            P = random_unimodular(o, rng)
            assert compute_invariants(P * A * P.inverse()) == inv


def test_square_conjugator_from_construction():
    for a in (o5(1), o5(-1), o5(0, 1), o5(1, 1)):
        A = build_matrix_principal(a, o5(0))
        P = Mat3.build([[0, 1, a], [1, 0, 0], [0, 0, 1]], o5)
        B = P * A * A * P.inverse()
        assert compute_invariants(B) == compute_invariants(A)
        assert brute_force_conjugate(A, B, 1) is not None


def test_brute_force_identity_and_absence():
    A0, A1 = principal_representatives(5)[:2]
    P = brute_force_conjugate(A0, A0, 1)
    assert P is not None and P * A0 == A0 * P
    assert brute_force_conjugate(A0, A1, 2) is None


def test_enumeration_against_rational_bruteforce():
    o = make_order(-1)
    mats = enumerate_order3(o, 1)
    got = {A for A in mats if all(x.b == 0 for row in A.entries for x in row)}
    I = Mat3.identity(o)
    brute = set()
    for e in itertools.product((-1, 0, 1), repeat=9):
        A = Mat3.build([e[0:3], e[3:6], e[6:9]], o)
        if A != I and A * A * A == I:
            brute.add(A)
    assert got == brute
    assert len(mats) == 38888


def test_rank_invariant_separates():
    o = make_order(-1)
    reps = principal_representatives(1)
    ranks = sorted(rank_minus_one_mod3(A) for A in reps)
    assert ranks == [2, 4]


def test_table1_counts():
    expected = {1: (0, 2), 2: (0, 4), 7: (0, 3), 11: (0, 4), 19: (0, 3)}
    for m, lm in expected.items():
        assert count_conjugacy_classes(m) == lm
    cc = conjugacy_decomposition(2)
    assert (cc.c, cc.h_mu, cc.h_lambda, cc.embeddings) == (4, 1, 0, 4)


def test_hypotheses():
    with pytest.raises(UnsupportedCase):
        check_theorem_hypotheses(5)
    with pytest.raises(UnsupportedCase):
        check_theorem_hypotheses(15)
    with pytest.raises(InvalidInput):
        check_theorem_hypotheses(8)


def test_normalizer_descriptors():
    o2 = make_order(-2)
    inv = compute_invariants(build_matrix_principal(o2(1), o2(0)))
    d = normalizer_descriptor(inv, "imaginary3", 2)
    assert d.describe() == "((Z x mu_3) x| Z/2) x mu_2"
    o1 = make_order(-1)
    inv0 = compute_invariants(build_matrix_principal(o1(0), o1(0)))
    d = normalizer_descriptor(inv0, "imaginary3", 4)
    assert d.extra_torsion_order == 4
    d7 = normalizer_descriptor(None, "sqrt-7_7")
    assert (d7.free_rank, d7.torsion_order, d7.galois_order) == (2, 14, 3)
    with pytest.raises(InvalidInput):
        normalizer_descriptor(None, "nonsense")


def test_admissible_primes_and_pgl():
    assert admissible_torsion_primes(make_order(-7)) == {3, 7}
    assert admissible_torsion_primes(make_order(-2)) == {3}
    assert admissible_torsion_primes(make_order(5)) == {3, 5}
    for m in (1, 2, 5, 7, 11, 19, 23, 31):
        assert 5 not in admissible_torsion_primes(make_order(-m))
    assert count_pgl_l_z(5) == count_pgl_l_z(3) == count_pgl_l_z(7) == 2


def test_exchange_format_roundtrip():
    reps = principal_representatives(5)
    text = format_matrices(5, reps)
    m, mats = parse_matrices(text)
    assert m == 5 and mats == reps
    assert parse_entry("-3+2*w", o5) == o5(-3, 2) and parse_entry("4", o5) == o5(4)


@pytest.mark.parametrize("text", ["", "m=4\n1 0 0\n0 1 0\n0 0 1\n", "m=5\n1 0\n", "m=x\n",
                                  "m=5\n1 0 0\n0 1 0\n", "m=5\n1 0 0\n0 1 0\n0 0 q\n"])
def test_exchange_format_rejects(text):
    with pytest.raises(InvalidInput):
        parse_matrices(text)
