"""Unit groups of O_K[zeta_3] (and O_K[zeta_5] over Q(sqrt 5)) and their
images in O_K/(l), which determine the orbit number c.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cycloring import (CycloElem, CycloOrder, absolute_norm, make_cyclo_order,
                        reduce_mod_zeta_minus_1, sqrt_in_order)
from .errors import InvalidInput, UnsupportedCase
from .quadring import (PRIME, QuadOrder, Residue, all_residues, fundamental_unit_real,
                       is_squarefree, make_order)


@dataclass(frozen=True)
class UnitGroupData:
    torsion_order: int
    fundamental: CycloElem
    hasse_index: int
    torsion: tuple  # all roots of unity of the order
    real_unit: CycloElem  # fundamental unit of the maximal real subfield, embedded


@dataclass(frozen=True)
class ReductionImage:
    subgroup: tuple  # sorted residues
    generators: tuple
    kind: str

    @property
    def order(self) -> int:
        return len(self.subgroup)

    def is_full(self) -> bool:
        """Image equals the whole unit group of the residue ring."""
        p = self.subgroup[0].p
        units = [r for r in all_residues(self.kind, p) if r.is_unit()]
        return len(units) == self.order


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple  # tuples of residues, each sorted, ordered by least element
    count: int

    def representatives(self) -> list[Residue]:
        return [orb[0] for orb in self.orbits]


def _check_m(m: int):
    if m <= 0 or not is_squarefree(m):
        raise InvalidInput(f"m={m} must be a positive squarefree integer")
    if m % 3 == 0:
        raise UnsupportedCase(f"3 divides m={m}: O_-m[zeta_3] is not the maximal order")


def quartic_order(m: int) -> CycloOrder:
    """O_-m[zeta_3]."""
    _check_m(m)
    return make_cyclo_order(make_order(-m), 3)


def torsion_units(O: CycloOrder) -> list[CycloElem]:
    """Roots of unity of O_K[zeta_3]: (roots of unity of O_K) x <zeta>."""
    o = O.base
    base = [o(1), o(-1)]
    if o.d == -1:
        base += [o(0, 1), o(0, -1)]
    out = []
    z = O.zeta
    for k in range(3):
        for u in base:
            out.append(O.embed(u) * z ** k)
    return out


def torsion_generators(O: CycloOrder) -> list[CycloElem]:
    o = O.base
    gens = [O.elem(-1), O.zeta]
    if o.d == -1:
        gens.append(O.elem(o(0, 1)))
    return gens


def embedded_real_unit(O: CycloOrder) -> CycloElem:
    """Fundamental unit of the maximal real subfield of K(zeta_3), inside O.

    For imaginary K = Q(sqrt -m) this is Q(sqrt 3m) with
    sqrt(3m) = sqrt(-m) * sqrt(-3) and sqrt(-3) = 2*zeta + 1.
    """
    o = O.base
    if o.d > 0:
        return O.embed(fundamental_unit_real(o).unit)
    real = make_order(-3 * o.d)
    eps = fundamental_unit_real(real).unit
    p, q, den = eps.sqrt_coords()
    s3m = O.embed(o.sqrt_d()) * (O.zeta * 2 + 1)
    scaled = O.elem(p) + s3m * q
    v = scaled.vector()
    if any(x % den for x in v):
        raise AssertionError("embedded real unit is not integral")
    return O.from_vector([x // den for x in v])


@lru_cache(maxsize=None)
def cm_unit_data(O: CycloOrder) -> UnitGroupData:
    """Unit group of O_K[zeta_3] modulo torsion, via the Hasse unit index.

    Either eps (the real fundamental unit) is fundamental, or some root of
    unity times eps is a square eta^2 and eta is fundamental.
    """
    if O.ell != 3:
        raise UnsupportedCase("CM unit computation is implemented for l = 3")
    eps = embedded_real_unit(O)
    tors = torsion_units(O)
    fundamental, index = eps, 1
    for t in tors:
        eta = sqrt_in_order(t * eps)
        if eta is not None:
            fundamental, index = eta, 2
            break
    return UnitGroupData(len(tors), fundamental, index, tuple(tors), eps)


def fundamental_unit_quartic(m: int) -> UnitGroupData:
    return cm_unit_data(quartic_order(m))


def is_fundamental_certified(data: UnitGroupData) -> bool:
    """No root of unity times the fundamental unit is a square."""
    u = data.fundamental
    if abs(absolute_norm(u)) != 1:
        return False
    return all(sqrt_in_order(t * u) is None for t in data.torsion)


def _closure(gens: list[Residue]) -> tuple:
    one = gens[0].one()
    group = {one}
    frontier = [one]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in group:
                    group.add(y)
                    new.append(y)
        frontier = new
    return tuple(sorted(group))


def image_of(units) -> ReductionImage:
    gens = tuple(reduce_mod_zeta_minus_1(u) for u in units)
    return ReductionImage(_closure(list(gens)), gens, gens[0].kind)


def unit_generators(O: CycloOrder) -> list[CycloElem]:
    if O.ell == 3:
        return torsion_generators(O) + [cm_unit_data(O).fundamental]
    if O.ell == 5 and O.base.d == 5:
        # Z[zeta_5]^x = <-zeta> x <(1 + sqrt 5)/2>
        return [O.elem(-1), O.zeta, O.embed(fundamental_unit_real(O.base).unit)]
    raise UnsupportedCase(f"unit group of {O.label()} is not implemented")


@lru_cache(maxsize=None)
def reduction_image_of(O: CycloOrder) -> ReductionImage:
    return image_of(unit_generators(O))


def orbits_under(image: ReductionImage) -> OrbitDecomposition:
    p = image.subgroup[0].p
    seen = set()
    orbits = []
    for r in all_residues(image.kind, p):
        if r in seen:
            continue
        orb = tuple(sorted({r * g for g in image.subgroup}))
        seen.update(orb)
        orbits.append(orb)
    return OrbitDecomposition(tuple(orbits), len(orbits))


def reduction_image(m: int) -> ReductionImage:
    return reduction_image_of(quartic_order(m))


def orbit_count(m: int) -> OrbitDecomposition:
    return orbits_under(reduction_image(m))


def orbit_representatives(m: int) -> list[Residue]:
    return orbit_count(m).representatives()


def canonical_orbit_rep(O: CycloOrder, r: Residue) -> Residue:
    for orb in orbits_under(reduction_image_of(O)).orbits:
        if r in orb:
            return orb[0]
    raise ValueError(f"{r} is not a residue of {O.label()}")


@dataclass(frozen=True)
class RealCaseImage:
    base_image: ReductionImage  # image of O_K^x
    full_image: ReductionImage  # image of O_K[zeta]^x
    orbits: OrbitDecomposition


def real_case_reduction_image(m: int, ell: int = 3) -> RealCaseImage:
    """Reduction images for a real quadratic base Q(sqrt m)."""
    if m <= 1 or not is_squarefree(m):
        raise InvalidInput(f"m={m} must be squarefree and > 1")
    o = make_order(m)
    O = make_cyclo_order(o, ell)
    eps = O.embed(fundamental_unit_real(o).unit)
    base = image_of([O.elem(-1), eps])
    full = reduction_image_of(O)
    return RealCaseImage(base, full, orbits_under(full))


def residue_kind_for(O: CycloOrder) -> str:
    return reduction_image_of(O).kind if O.ell == 3 else PRIME
