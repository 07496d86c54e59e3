import random

import pytest
import sympy

from quadtorsion.cycloring import (absolute_norm, base_conj, complex_conj, galois_sigma, make_cyclo_order,
                                   poly_mul, psi_polynomial, reduce_mod_zeta_minus_1, relative_norm,
                                   relative_trace, sqrt_in_order, trace_form, trace_form_gram)
from quadtorsion.errors import UnsupportedCase
from quadtorsion.quadring import PRODUCT, make_order

SUPPORTED = [(-1, 3), (-2, 3), (-5, 3), (-7, 3), (2, 3), (5, 3), (5, 5), (-7, 7)]


def rand_elem(O, rng, h=9):
    o = O.base
    return O.elem(*[o(rng.randint(-h, h), rng.randint(-h, h)) for _ in range(O.degree)])


def test_make_cyclo_order_examples():
    O = make_cyclo_order(make_order(-2), 3)
    assert O.degree == 2 and [c.a for c in psi_polynomial(O)] == [1, 1, 1]
    O7 = make_cyclo_order(make_order(-7), 7)
    w = O7.base.omega
    # T^3 + (1 - sqrt-7)/2 T^2 + ... with (1 - sqrt-7)/2 = 1 - w
    assert O7.degree == 3 and psi_polynomial(O7)[2] == 1 - w
    O5 = make_cyclo_order(make_order(5), 5)
    # X^2 - (sqrt5 - 1)/2 X + 1
    assert psi_polynomial(O5) == [O5.base(1), -(O5.base.omega - 1), O5.base(1)]


@pytest.mark.parametrize("d,ell", [(-3, 3), (-6, 3), (-1, 5), (-2, 7), (13, 5)])
def test_unsupported_pairs(d, ell):
    with pytest.raises(UnsupportedCase):
        make_cyclo_order(make_order(d), ell)


@pytest.mark.parametrize("d,ell", SUPPORTED)
def test_zeta_is_root_of_unity(d, ell):
    O = make_cyclo_order(make_order(d), ell)
    assert O.zeta ** ell == O.one and O.zeta != O.one
    # Psi(zeta) = 0
    acc = O.zero
    for i, c in enumerate(psi_polynomial(O)):
        acc = acc + O.zeta ** i * c
    assert not acc


def test_psi7_times_conjugate_is_phi7():
    O = make_cyclo_order(make_order(-7), 7)
    f = psi_polynomial(O)
    g = [c.conj() for c in f]
    prod = poly_mul(f, g, O.base.zero)
    T = sympy.symbols("T")
    phi = sympy.Poly(sympy.cyclotomic_poly(7, T), T).all_coeffs()[::-1]
    assert [c for c in prod] == [O.base(int(x)) for x in phi]


@pytest.mark.parametrize("d,ell", SUPPORTED)
def test_sigma_and_norm_properties(d, ell, rng):
    O = make_cyclo_order(make_order(d), ell)
    assert galois_sigma(O.zeta) == O.zeta ** O.galois_power
    for _ in range(200):
        x, y = rand_elem(O, rng), rand_elem(O, rng)
        s = x
        for _ in range(O.degree):
            s = galois_sigma(s)
        assert s == x
        assert galois_sigma(x * y) == galois_sigma(x) * galois_sigma(y)
        assert relative_norm(x * y) == relative_norm(x) * relative_norm(y)
        assert relative_trace(x + y) == relative_trace(x) + relative_trace(y)
        assert complex_conj(complex_conj(x)) == x


def test_sigma_examples():
    O = make_cyclo_order(make_order(-2), 3)
    z, s = O.zeta, O.embed(O.base.sqrt_d())
    assert galois_sigma(z) == -1 - z
    u = z - s * z + 2
    assert galois_sigma(u) == (-1 - z) * (1 - s) + 2
    assert relative_norm(z) == O.base(1)
    assert relative_norm(1 - z) == O.base(3)
    assert abs(absolute_norm(u)) == 1


def test_reduction_worked_examples():
    O2 = make_cyclo_order(make_order(-2), 3)
    z, s = O2.zeta, O2.embed(O2.base.sqrt_d())
    r = reduce_mod_zeta_minus_1(z - s * z + 2)
    assert r.kind == PRODUCT and r.value == (2, 1)
    O5 = make_cyclo_order(make_order(-5), 3)
    z, s = O5.zeta, O5.embed(O5.base.sqrt_d())
    r = reduce_mod_zeta_minus_1(-s + 4 * (z + 1) + z * s)
    assert r.value == (2, 2)  # (-1, -1)


@pytest.mark.parametrize("d,ell", SUPPORTED)
def test_reduction_homomorphism(d, ell, rng):
    O = make_cyclo_order(make_order(d), ell)
    assert reduce_mod_zeta_minus_1(O.zeta - 1).is_zero()
    assert reduce_mod_zeta_minus_1(O.elem(ell)).is_zero()
    for _ in range(200):
        x, y = rand_elem(O, rng), rand_elem(O, rng)
        assert reduce_mod_zeta_minus_1(x * y) == reduce_mod_zeta_minus_1(x) * reduce_mod_zeta_minus_1(y)
        assert reduce_mod_zeta_minus_1(x + y) == reduce_mod_zeta_minus_1(x) + reduce_mod_zeta_minus_1(y)


@pytest.mark.parametrize("d", [-1, -2, -5, -7])
def test_trace_form_positive(d, rng):
    O = make_cyclo_order(make_order(d), 3)
    G = trace_form_gram(O)
    assert sympy.Matrix(G).is_positive_definite
    for _ in range(50):
        x = rand_elem(O, rng)
        v = x.vector()
        assert trace_form(x) == sum(v[i] * G[i][j] * v[j] for i in range(4) for j in range(4))


@pytest.mark.parametrize("d", [-1, -2, -5, -10, 2])
def test_sqrt_in_order(d, rng):
    O = make_cyclo_order(make_order(d), 3)
    for _ in range(100):
        x = rand_elem(O, rng, 5)
        r = sqrt_in_order(x * x)
        assert r is not None and r * r == x * x
    assert sqrt_in_order(O.elem(7)) is None
    assert sqrt_in_order(O.zeta) == O.zeta ** 2 or sqrt_in_order(O.zeta) == -(O.zeta ** 2)


def test_base_conj_is_automorphism(rng):
    O = make_cyclo_order(make_order(-5), 3)
    for _ in range(100):
        x, y = rand_elem(O, rng), rand_elem(O, rng)
        assert base_conj(x * y) == base_conj(x) * base_conj(y)
