import itertools

import pytest

from quadtorsion.classnum import class_number_biquadratic, class_number_quadratic, field_discriminant
from quadtorsion.cycloring import absolute_norm, galois_sigma, reduce_mod_zeta_minus_1, relative_norm
from quadtorsion.errors import InvalidInput, UnsupportedCase
from quadtorsion.quadring import FIELD9, PRODUCT, all_residues
from quadtorsion.units import (canonical_orbit_rep, fundamental_unit_quartic, is_fundamental_certified,
                               orbit_count, quartic_order, real_case_reduction_image, reduction_image,
                               torsion_units)

M_VALUES = [1, 2, 5, 10, 13, 14, 17, 22, 26, 29]


def units_by_search(m, h):
    O = quartic_order(m)
    out = []
    for v in itertools.product(range(-h, h + 1), repeat=4):
        x = O.from_vector(v)
        if x and abs(absolute_norm(x)) == 1:
            out.append(x)
    return out


def orbit_count_oracle(m, h=6):
    """Orbits on O/(3) under the residues of all units of height <= h."""
    units = units_by_search(m, h)
    img = {reduce_mod_zeta_minus_1(u) for u in units}
    kind = next(iter(img)).kind
    seen, count = set(), 0
    for r in all_residues(kind):
        if r not in seen:
            count += 1
            seen |= {r * g for g in img}
    return count, img


def inverse_unit(u):
    n = relative_norm(u)
    return galois_sigma(u) * n.inverse()


def same_up_to_torsion(x, y, O):
    tors = torsion_units(O)
    return any(x == t * y or x == t * inverse_unit(y) for t in tors)


@pytest.mark.parametrize("m", M_VALUES)
def test_orbit_count_against_unit_search(m):
    count, img = orbit_count_oracle(m)
    assert orbit_count(m).count == count
    assert set(reduction_image(m).subgroup) == img


def test_orbit_count_values():
    # derived from the unit search above and the structure of the residue rings;
    # m = 10 and 22 differ from the tabulated 4 (see the decisions ledger)
    got = {m: orbit_count(m).count for m in M_VALUES}
    assert got == {1: 2, 2: 4, 5: 5, 10: 5, 13: 3, 14: 5, 17: 5, 22: 5, 26: 4, 29: 5}


def test_torsion():
    assert len(torsion_units(quartic_order(1))) == 12
    assert len(torsion_units(quartic_order(2))) == 6


def test_tabulated_fundamental_units():
    O2 = quartic_order(2)
    z, s = O2.zeta, O2.embed(O2.base.sqrt_d())
    assert same_up_to_torsion(fundamental_unit_quartic(2).fundamental, z - s * z + 2, O2)
    O5 = quartic_order(5)
    z, s = O5.zeta, O5.embed(O5.base.sqrt_d())
    assert same_up_to_torsion(fundamental_unit_quartic(5).fundamental, -s + 4 * (z + 1) + z * s, O5)


@pytest.mark.parametrize("m", M_VALUES)
def test_fundamental_unit_certified(m):
    data = fundamental_unit_quartic(m)
    assert is_fundamental_certified(data)
    assert abs(absolute_norm(data.fundamental)) == 1
    assert data.hasse_index in (1, 2)


@pytest.mark.parametrize("m", M_VALUES)
def test_hasse_index_matches_class_number_relation(m):
    # Q = 2 iff h(biquadratic) = h(-m) h(3m); Q = 1 iff it is half of that product
    prod = class_number_quadratic(field_discriminant(-m)).h * class_number_quadratic(field_discriminant(3 * m)).h
    h = class_number_biquadratic(m)
    assert (h == prod) == (fundamental_unit_quartic(m).hasse_index == 2)


def test_reduction_images():
    img2 = reduction_image(2)
    assert img2.kind == PRODUCT and img2.is_full()
    assert any(r.value == (2, 1) for r in img2.subgroup)
    img5 = reduction_image(5)
    assert sorted(r.value for r in img5.subgroup) == [(1, 1), (2, 2)]
    assert reduction_image(1).kind == FIELD9 and reduction_image(1).is_full()


def test_canonical_orbit_rep_is_class_function():
    O = quartic_order(5)
    img = reduction_image(5)
    for r in all_residues(PRODUCT):
        c = canonical_orbit_rep(O, r)
        assert all(canonical_orbit_rep(O, r * g) == c for g in img.subgroup)


def test_real_base_images():
    # maximal image already from O_m^x for 2, 5, 13, 17; only +-1 for 7, 11
    for m in (2, 5, 13, 17):
        assert real_case_reduction_image(m).base_image.is_full()
    for m in (7, 11):
        assert real_case_reduction_image(m).base_image.order == 2


def test_invalid_m():
    with pytest.raises(InvalidInput):
        quartic_order(4)
    with pytest.raises(UnsupportedCase):
        quartic_order(3)


@pytest.mark.parametrize("m,h_minus,h_real", [(10, 2, 2), (22, 2, 2)])
def test_f9_cases_with_index_one(m, h_minus, h_real):
    # The tabulated h = 2 equals (Q/2) h(-m) h(3m) only for Q = 1, so the units are
    # torsion times the real fundamental unit, which reduces to -1 mod (zeta - 1).
    assert class_number_quadratic(field_discriminant(-m)).h == h_minus
    assert class_number_quadratic(field_discriminant(3 * m)).h == h_real
    assert class_number_biquadratic(m) == 2
    data = fundamental_unit_quartic(m)
    assert data.hasse_index == 1
    assert reduce_mod_zeta_minus_1(data.real_unit).value == (2, 0)
    assert orbit_count(m).count == 5
