"""Ideals of quadratic orders and of O_K[zeta_3] as integer lattices in HNF.

Elements are integer coordinate vectors on the Z-basis (1, w) of O_K or
(1, w, zeta, w*zeta) of O_K[zeta_3].  Principality is decided by a complete
short-vector enumeration under the positive trace form, with a radius
that provably contains a generator whenever one exists.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt

from . import lattice
from .cycloring import (CycloElem, CycloOrder, absolute_norm, base_conj, galois_sigma,
                        relative_norm, trace_form, trace_form_gram)
from .errors import InvalidInput, ResourceCapExceeded, UnsupportedCase
from .quadring import QuadInt, QuadOrder, fundamental_unit_real
from .units import cm_unit_data, quartic_order

DEFAULT_MINKOWSKI_CAP = 200


# ---------------------------------------------------------------------------
# ring adapters


class _Ring:
    """Multiplication table, trace form and unit data of an order."""

    def __init__(self, order):
        self.order = order
        if isinstance(order, QuadOrder):
            self.rank = 2
            self.basis = [order(1), order(0, 1)]
            self.to_vec = lambda x: [x.a, x.b]
            self.from_vec = lambda v: QuadInt(v[0], v[1], order)
            self.norm = lambda x: x.norm()
            if order.d < 0:
                self.gram = [[(self.basis[i] * self.basis[j].conj()).trace() for j in range(2)]
                             for i in range(2)]
            else:
                self.gram = [[(self.basis[i] * self.basis[j]).trace() for j in range(2)]
                             for i in range(2)]
            self.autos = [lambda x: x.conj()]
        else:
            if order.ell != 3:
                raise UnsupportedCase("ideal arithmetic is implemented for O_K[zeta_3]")
            self.rank = 4
            self.basis = order.basis()
            self.to_vec = lambda x: x.vector()
            self.from_vec = order.from_vector
            self.norm = absolute_norm
            self.gram = trace_form_gram(order)
            self.autos = [galois_sigma, base_conj, lambda x: base_conj(galois_sigma(x))]
        prods = {}
        for i, bi in enumerate(self.basis):
            for j, bj in enumerate(self.basis):
                prods[i, j] = self.to_vec(bi * bj)
        self.table = prods

    def mul(self, u, v):
        n = self.rank
        out = [0] * n
        for i in range(n):
            if not u[i]:
                continue
            for j in range(n):
                if not v[j]:
                    continue
                c = u[i] * v[j]
                row = self.table[i, j]
                for k in range(n):
                    if row[k]:
                        out[k] += c * row[k]
        return out

    def principal_bound(self, N: int) -> int:
        """T(alpha) bound met by some generator alpha of any principal ideal of norm N."""
        o = self.order
        if isinstance(o, QuadOrder):
            if o.d < 0:
                return 2 * N
            eps = fundamental_unit_real(o).unit
            tr2 = (eps * eps).trace()
            return isqrt(N * N * (tr2 + 2)) + 1
        u = cm_unit_data(o).fundamental
        return isqrt(2 * N * (trace_form(u) + 4)) + 1


@lru_cache(maxsize=None)
def ring_of(order) -> _Ring:
    return _Ring(order)


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class HnfIdeal:
    basis: tuple  # rows, upper triangular HNF
    order: object = field(compare=True)

    @property
    def norm(self) -> int:
        n = 1
        for i, row in enumerate(self.basis):
            n *= row[i]
        return n

    def contains(self, x) -> bool:
        R = ring_of(self.order)
        v = x if isinstance(x, list) else R.to_vec(x)
        return lattice.solve_integer(self.basis, v) is not None

    def generators(self):
        R = ring_of(self.order)
        return [R.from_vec(list(r)) for r in self.basis]

    def __str__(self):
        return f"HnfIdeal(norm={self.norm}, basis={[list(r) for r in self.basis]})"


def _from_rows(rows, order) -> HnfIdeal:
    R = ring_of(order)
    H = lattice.hnf(rows)
    if len(H) != R.rank:
        raise InvalidInput("the zero ideal (or a non full-rank module) was given")
    return HnfIdeal(tuple(tuple(r) for r in H), order)


def ideal_from_basis(rows, order) -> HnfIdeal:
    """Ideal from a Z-basis of an O-stable full-rank lattice (not checked)."""
    return _from_rows(rows, order)


def _order_of(x):
    return x.order


def ideal_from_generators(gens, order=None) -> HnfIdeal:
    gens = list(gens)
    if not gens:
        raise InvalidInput("no generators")
    order = order if order is not None else _order_of(gens[0])
    R = ring_of(order)
    rows = []
    for g in gens:
        v = g if isinstance(g, list) else R.to_vec(g)
        for b in range(R.rank):
            e = [0] * R.rank
            e[b] = 1
            rows.append(R.mul(v, e))
    return _from_rows(rows, order)


def unit_ideal(order) -> HnfIdeal:
    R = ring_of(order)
    return HnfIdeal(tuple(tuple(int(i == j) for j in range(R.rank)) for i in range(R.rank)), order)


def ideal_mul(I: HnfIdeal, J: HnfIdeal) -> HnfIdeal:
    if I.order != J.order:
        raise InvalidInput("ideals of different orders")
    R = ring_of(I.order)
    rows = [R.mul(list(u), list(v)) for u in I.basis for v in J.basis]
    return _from_rows(rows, I.order)


def ideal_pow(I: HnfIdeal, k: int) -> HnfIdeal:
    out = unit_ideal(I.order)
    for _ in range(k):
        out = ideal_mul(out, I)
    return out


def ideal_norm(I: HnfIdeal) -> int:
    return I.norm


def _apply(I: HnfIdeal, f) -> HnfIdeal:
    R = ring_of(I.order)
    return _from_rows([R.to_vec(f(R.from_vec(list(r)))) for r in I.basis], I.order)


def apply_sigma(I: HnfIdeal) -> HnfIdeal:
    """Image under the generator of Gal(K(zeta)/K) (conjugation for a quadratic order)."""
    if isinstance(I.order, QuadOrder):
        return _apply(I, lambda x: x.conj())
    return _apply(I, galois_sigma)


def conjugate_product(I: HnfIdeal) -> HnfIdeal:
    """Product of the nontrivial Galois conjugates, so that I * result = (N(I))."""
    out = None
    for f in ring_of(I.order).autos:
        J = _apply(I, f)
        out = J if out is None else ideal_mul(out, J)
    return out


def _enumerate(I: HnfIdeal, bound: int):
    R = ring_of(I.order)
    return lattice.lattice_short_vectors([list(r) for r in I.basis], R.gram, bound)


def is_principal(I: HnfIdeal):
    """A generator of I, or None; exact by complete enumeration."""
    R = ring_of(I.order)
    N = I.norm
    if N == 1:
        return R.from_vec([1] + [0] * (R.rank - 1))
    for v, _ in _enumerate(I, R.principal_bound(N)):
        x = R.from_vec(v)
        if abs(R.norm(x)) == N:
            return x
    return None


def principal_ideal(x) -> HnfIdeal:
    return ideal_from_generators([x])


def scale_divide(I: HnfIdeal, x, n: int) -> HnfIdeal:
    """The ideal x*I/n, which must be integral."""
    R = ring_of(I.order)
    xv = x if isinstance(x, list) else R.to_vec(x)
    rows = []
    for r in I.basis:
        v = R.mul(xv, list(r))
        if any(c % n for c in v):
            raise ValueError("x*I/n is not integral")
        rows.append([c // n for c in v])
    return _from_rows(rows, I.order)


def reduce_ideal(I: HnfIdeal) -> HnfIdeal:
    """An integral ideal of small norm in the class of I.

    With I' the conjugate product (I I' = (N)), a short alpha in I' gives
    alpha*I/N, of norm |N(alpha)|/N^(deg-1).
    """
    N = I.norm
    if N == 1:
        return I
    R = ring_of(I.order)
    Ip = conjugate_product(I)
    red = lattice.lll([list(r) for r in Ip.basis], R.gram)
    best = None
    for v in red:
        nv = abs(R.norm(R.from_vec(v)))
        if best is None or nv < best[0]:
            best = (nv, v)
    J = scale_divide(I, best[1], N)
    return J if J.norm < N else I


def equivalent(I: HnfIdeal, J: HnfIdeal, J_conj: HnfIdeal | None = None) -> bool:
    Jc = J_conj if J_conj is not None else conjugate_product(J)
    return is_principal(ideal_mul(I, Jc)) is not None


# ---------------------------------------------------------------------------
# prime ideals


def _primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % q for q in range(2, isqrt(p) + 1))]


def base_primes_above(o: QuadOrder, p: int):
    """[(ideal generators, residue degree)] for the primes of O_K above p."""
    roots = [r for r in range(p) if (r * r - o.t * r - o.n) % p == 0]
    if not roots:
        return [([o(p)], 2)]
    return [([o(p), o(-r, 1)], 1) for r in roots]


def primes_above(O: CycloOrder, p: int) -> list[HnfIdeal]:
    """Prime ideals of O_K[zeta_3] above p (Kummer-Dedekind over O_K)."""
    o = O.base
    out = []
    for gens, f in base_primes_above(o, p):
        egens = [O.embed(g) for g in gens]
        if p == 3:
            out.append(ideal_from_generators(egens + [O.zeta - 1]))
            continue
        # roots of T^2 + T + 1 in O_K / P, lifted to small elements of O_K
        if f == 1:
            cands = [o(r) for r in range(p)]
        else:
            cands = [o(a, b) for a in range(p) for b in range(p)]
        P = ideal_from_generators(gens, o)
        roots = [r for r in cands if P.contains(r * r + r + 1)]
        if not roots:
            out.append(ideal_from_generators(egens))
        else:
            for r in roots:
                out.append(ideal_from_generators(egens + [O.zeta - O.embed(r)]))
    uniq = sorted(set(out), key=lambda I: (I.norm, I.basis))
    return uniq


# ---------------------------------------------------------------------------
# class group


@dataclass(frozen=True)
class ClassGroupData:
    order_h: int
    reps: tuple
    law: tuple  # law[i][j] = index of class(i) * class(j)
    sigma_action: tuple
    order: CycloOrder = None
    rep_conj: tuple = ()


def field_discriminant_abs(O: CycloOrder) -> int:
    from .classnum import field_discriminant

    d = O.base.d
    return abs(field_discriminant(d)) * 3 * abs(field_discriminant(-3 * d))


def minkowski_bound(O: CycloOrder) -> int:
    """An integer B >= (3/(2 pi^2)) sqrt|d_L| (uses 4 pi^4 > 389)."""
    D = field_discriminant_abs(O)
    return isqrt(9 * D // 389) + 1


def class_of(cg: ClassGroupData, I: HnfIdeal) -> int:
    for k, (R, Rc) in enumerate(zip(cg.reps, cg.rep_conj)):
        if equivalent(I, R, Rc):
            return k
    raise AssertionError("ideal class not found among representatives")


def class_group_of(O: CycloOrder, cap: int = DEFAULT_MINKOWSKI_CAP) -> ClassGroupData:
    B = minkowski_bound(O)
    if B > cap:
        raise ResourceCapExceeded(f"Minkowski bound {B} exceeds cap {cap}")
    gens = []
    for p in _primes_upto(B):
        for P in primes_above(O, p):
            if P.norm <= B:
                gens.append(P)
    one = unit_ideal(O)
    reps = [one]
    rep_conj = [one]

    def find(X):
        for k in range(len(reps)):
            if equivalent(X, reps[k], rep_conj[k]):
                return k
        return None

    # breadth-first closure under multiplication by the small primes
    i = 0
    while i < len(reps):
        for P in gens:
            X = reduce_ideal(ideal_mul(reps[i], P))
            if find(X) is None:
                reps.append(X)
                rep_conj.append(conjugate_product(X))
        i += 1
    h = len(reps)
    law = [[0] * h for _ in range(h)]
    for a in range(h):
        for b in range(a, h):
            k = find(reduce_ideal(ideal_mul(reps[a], reps[b])))
            law[a][b] = law[b][a] = k
    sigma = tuple(find(reduce_ideal(apply_sigma(R))) for R in reps)
    return ClassGroupData(h, tuple(reps), tuple(tuple(r) for r in law), sigma, O, tuple(rep_conj))


@lru_cache(maxsize=None)
def _class_group_cached(m: int, cap: int) -> ClassGroupData:
    return class_group_of(quartic_order(m), cap)


def class_group(m: int, cap: int = DEFAULT_MINKOWSKI_CAP) -> ClassGroupData:
    return _class_group_cached(m, cap)


def galois_orbit_counts(cg: ClassGroupData) -> tuple[int, int]:
    """(h_mu, h_lambda): sigma-fixed classes and 2-element sigma-orbits."""
    fixed = sum(1 for i, j in enumerate(cg.sigma_action) if i == j)
    two = (cg.order_h - fixed) // 2
    return fixed, two


# ---------------------------------------------------------------------------
# relative norms of ideals


def relative_norm_ideal(I: HnfIdeal) -> HnfIdeal:
    """N_{L/K}(I) as an ideal of O_K, generated by norms of elements of I."""
    O = I.order
    o = O.base
    R = ring_of(O)
    elems = [R.from_vec(list(r)) for r in I.basis]
    samples = list(elems)
    for a in range(len(elems)):
        for b in range(a + 1, len(elems)):
            samples += [elems[a] + elems[b], elems[a] - elems[b]]
    target = I.norm
    gens = []
    for x in samples:
        gens.append(relative_norm(x))
        J = ideal_from_generators([g for g in gens if g], o)
        if J.norm == target:
            return J
    raise AssertionError("relative norm ideal not reached by samples")
