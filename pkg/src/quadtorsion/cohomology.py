"""Monomial models of Farrell-Tate cohomology and their invariant parts.

The model for Z/n x Z^r with l | n is F_l[a2, a2^-1](b1, x1..xr): a basis
is given by monomials a2^k b1^e x_S (e in {0, 1}, S a subset of 1..r) of
degree 2k + e + |S|.  A finite cyclic group of order g acts diagonally,
each generator carrying a character in Z/g; a monomial is invariant when
its characters sum to 0.  With factorwise set, invariance is imposed
separately on the a2/b1 part and on the exterior part.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd, lcm

from .classnum import class_number_cyclotomic
from .errors import InvalidInput, UnsupportedCase
from .reiner import conjugacy_decomposition
from .units import real_case_reduction_image, reduction_image_of
from .cycloring import make_cyclo_order
from .quadring import is_squarefree, make_order


@dataclass(frozen=True)
class GradedAlgebraModel:
    ell: int
    has_b1: bool = True
    exterior_rank: int = 0
    group_order: int = 1  # order g of the acting cyclic group
    a2_char: int = 0
    b1_char: int = 0
    ext_chars: tuple = ()
    factorwise: bool = False
    laurent: bool = True
    name: str = ""

    def __post_init__(self):
        if len(self.ext_chars) not in (0, self.exterior_rank):
            raise InvalidInput("one character per exterior generator")

    @property
    def chars(self) -> tuple:
        return self.ext_chars or (0,) * self.exterior_rank

    @property
    def period(self) -> int:
        g = self.group_order
        return 2 * (g // gcd(g, self.a2_char % g)) if g > 1 else 2

    @property
    def series_start(self) -> int:
        return 1 if self.laurent else 0


def _monomials(model: GradedAlgebraModel, d: int):
    """(k, e, S) with 2k + e + |S| = d."""
    es = (0, 1) if model.has_b1 else (0,)
    r = model.exterior_rank
    for e in es:
        for size in range(r + 1):
            rest = d - e - size
            if rest % 2:
                continue
            k = rest // 2
            if k < 0 and not model.laurent:
                continue
            for S in combinations(range(r), size):
                yield k, e, S


def _is_invariant(model: GradedAlgebraModel, k, e, S) -> bool:
    g = model.group_order
    if g == 1:
        return True
    ch = model.chars
    front = k * model.a2_char + e * model.b1_char
    back = sum(ch[i] for i in S)
    if model.factorwise:
        return front % g == 0 and back % g == 0
    return (front + back) % g == 0


def tate_dimension(model: GradedAlgebraModel, d: int) -> int:
    return sum(1 for _ in _monomials(model, d))


def invariant_dimension(model: GradedAlgebraModel, d: int) -> int:
    return sum(1 for mono in _monomials(model, d) if _is_invariant(model, *mono))


def invariant_generator_degrees(model: GradedAlgebraModel, bound: int | None = None) -> list[int]:
    """Degrees of indecomposable invariant monomials with a2-exponent >= 0."""
    bound = bound if bound is not None else 2 * model.period + model.exterior_rank + 2
    inv = []
    for d in range(1, bound + 1):
        for k, e, S in _monomials(model, d):
            if k >= 0 and _is_invariant(model, k, e, S):
                inv.append((d, k, e, frozenset(S)))
    have = {(k, e, S) for _, k, e, S in inv}
    gens = []
    for d, k, e, S in inv:
        split = False
        for d1, k1, e1, S1 in inv:
            if d1 >= d or not S1 <= S or e1 > e or k1 > k:
                continue
            if (k - k1, e - e1, S - S1) in have:
                split = True
                break
        if not split:
            gens.append(d)
    return sorted(gens)


# ---------------------------------------------------------------------------
# rational series


@dataclass(frozen=True)
class RationalSeries:
    numerator: tuple  # coefficients from degree 0
    period: int

    @property
    def denominator(self) -> tuple:
        return (1,) + (0,) * (self.period - 1) + (-1,)

    def coefficient(self, d: int) -> int:
        return sum(self.numerator[j] for j in range(d % self.period, min(d, len(self.numerator) - 1) + 1,
                                                    self.period))

    def expand(self, n: int) -> list[int]:
        return [self.coefficient(d) for d in range(n)]

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        p = lcm(self.period, other.period)
        a, b = self.with_period(p).numerator, other.with_period(p).numerator
        n = max(len(a), len(b))
        return RationalSeries(_strip(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                                           for i in range(n))), p)

    def scale(self, c: int) -> "RationalSeries":
        return RationalSeries(_strip(tuple(c * x for x in self.numerator)), self.period)

    def with_period(self, p: int) -> "RationalSeries":
        """Same series over 1 - T^p (p a multiple of the period)."""
        if p % self.period:
            raise ValueError("period must be a multiple")
        q = self.period
        num = [0] * (len(self.numerator) + p - q)
        for j in range(0, p, q):
            for i, c in enumerate(self.numerator):
                num[i + j] += c
        return RationalSeries(_strip(tuple(num)), p)

    def format(self) -> str:
        num = " + ".join(_term(c, i) for i, c in enumerate(self.numerator) if c) or "0"
        return f"({num})/(1 - T^{self.period})"

    def to_json(self) -> dict:
        return {"numerator": list(self.numerator), "denominator": list(self.denominator)}

    @classmethod
    def from_json(cls, obj) -> "RationalSeries":
        return cls(tuple(obj["numerator"]), len(obj["denominator"]) - 1)


def _strip(coeffs: tuple) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _term(c, i):
    mono = "1" if i == 0 else ("T" if i == 1 else f"T^{i}")
    if i == 0:
        return str(c)
    return mono if c == 1 else f"{c}*{mono}"


def series_from_dims(dim, period: int, start: int = 1) -> RationalSeries:
    """Numerator c_d = dim(d) - dim(d - p) over degrees >= start."""
    def f(d):
        return dim(d) if d >= start else 0
    horizon = start + 3 * period
    num = tuple(f(d) - f(d - period) for d in range(horizon))
    s = RationalSeries(_strip(num), period)
    for d in range(horizon + 4 * period):
        if s.coefficient(d) != f(d):
            raise AssertionError(f"dimension function is not {period}-periodic from degree {start}")
    return s


def series_from_model(model: GradedAlgebraModel, invariant: bool = True) -> RationalSeries:
    dim = (lambda d: invariant_dimension(model, d)) if invariant else (lambda d: tate_dimension(model, d))
    return series_from_dims(dim, model.period, model.series_start)


# ---------------------------------------------------------------------------
# the models used for the normalizers


def cyclic_model(ell: int, r: int) -> GradedAlgebraModel:
    """Z/n x Z^r with l | n, no action."""
    return GradedAlgebraModel(ell, True, r, name=f"Z^{r} x Z/n" if r != 1 else "Z x Z/n")


def dihedral_model(ell: int, r: int, flip_exterior: bool) -> GradedAlgebraModel:
    """The involution acts by -1 on a2 and b1, and by -1 or +1 on the x_i."""
    chars = (1 if flip_exterior else 0,) * r
    return GradedAlgebraModel(ell, True, r, 2, 1, 1, chars, name="invariants of an involution")


def seven_torsion_model() -> GradedAlgebraModel:
    """Z/3 acting on Z^2 x Z/14 with F_7 coefficients.

    a2 and b1 carry the same primitive character; the rotation on Z^2
    diagonalizes over F_7 with characters 1 and 2.  Invariants are taken
    factorwise in nonnegative degrees.
    """
    return GradedAlgebraModel(7, True, 2, 3, 1, 1, (1, 2), factorwise=True, laurent=False,
                              name="Z/3-invariants, factorwise")


def seven_torsion_invariants(d: int) -> int:
    return invariant_dimension(seven_torsion_model(), d)


IMAGINARY_MU_PUBLISHED = "2(T^2+2T^3+T^4)/(1-T^4)"


# ---------------------------------------------------------------------------
# reports


@dataclass
class Component:
    kind: str  # lambda | mu | galois3
    group: str
    multiplicity: int
    model: GradedAlgebraModel
    series: RationalSeries
    generator_degrees: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"kind": self.kind, "group": self.group, "multiplicity": self.multiplicity,
                "series": self.series.to_json(), "generator_degrees": list(self.generator_degrees)}


@dataclass
class CohomologyReport:
    ring: str
    ell: int
    lam: int
    mu: int
    components: list
    series: RationalSeries
    dims: list  # [(degree, dimension)]
    notes: list = field(default_factory=list)

    @property
    def copies(self) -> int:
        """Number of normalizer summands, counted with multiplicity."""
        return sum(c.multiplicity for c in self.components)

    def to_json(self) -> dict:
        return {
            "ring": self.ring,
            "ell": self.ell,
            "lambda": self.lam,
            "mu": self.mu,
            "components": [c.to_json() for c in self.components],
            "copies": self.copies,
            "series": self.series.to_json(),
            "dims": [[d, n] for d, n in self.dims],
            "notes": list(self.notes),
        }


def _total_dim(components, d):
    return sum(c.multiplicity * (invariant_dimension(c.model, d) if c.model.group_order > 1
                                 else tate_dimension(c.model, d)) for c in components)


def _component(kind, group, mult, model) -> Component:
    inv = model.group_order > 1
    gens = invariant_generator_degrees(model) if inv else []
    return Component(kind, group, mult, model, series_from_model(model, inv), gens)


def _finish(ring, ell, lam, mu, comps, degree_range, notes) -> CohomologyReport:
    live = [c for c in comps if c.multiplicity]
    if live:
        total = None
        for c in live:
            s = c.series.scale(c.multiplicity)
            total = s if total is None else total + s
    else:
        total = RationalSeries((), 2)
    lo, hi = degree_range
    dims = [(d, _total_dim(live, d)) for d in range(lo, hi + 1)]
    return CohomologyReport(ring, ell, lam, mu, comps, total, dims, notes)


def assemble_report(m: int | None = None, ell: int = 3, field: str | None = None,
                    degree_range=(-4, 12)) -> CohomologyReport:
    """Report for PGL_3 over O_-m (ell=3), a real base field 'sqrtM' (ell=3),
    'sqrt5' (ell=5) or 'sqrt-7' (ell=7)."""
    if field is None and m is None:
        raise InvalidInput("give m or a field")
    if field is not None:
        f = field.replace("Q(", "").replace(")", "")
        if not f.startswith("sqrt"):
            raise InvalidInput(f"unknown field {field!r}")
        try:
            d = int(f[4:])
        except ValueError:
            raise InvalidInput(f"unknown field {field!r}") from None
        if d < 0:
            if ell == 7 and d == -7:
                return _report_sqrt_m7(degree_range)
            if ell == 3:
                return assemble_report(-d, 3, None, degree_range)
            raise UnsupportedCase(f"no {ell}-torsion in PGL_3 over Q(sqrt({d}))")
        if ell == 5:
            if d != 5:
                raise UnsupportedCase("5-torsion in PGL_3 occurs only over Q(sqrt 5)")
            return _report_sqrt5(degree_range)
        if ell == 3:
            return _report_real3(d, degree_range)
        raise UnsupportedCase(f"no {ell}-torsion in PGL_3 over Q(sqrt({d}))")
    if ell != 3:
        if ell == 7 and m == 7:
            return _report_sqrt_m7(degree_range)
        raise UnsupportedCase(f"l={ell} does not occur over O_-{m}")
    cc = conjugacy_decomposition(m)
    comps = [
        _component("lambda", "Z x Z/6", cc.lam, cyclic_model(3, 1)),
        _component("mu", "(Z x Z/6) x| Z/2", cc.mu, dihedral_model(3, 1, True)),
    ]
    notes = [f"c={cc.c} h={cc.h} h_mu={cc.h_mu} h_lambda={cc.h_lambda}",
             "mu-type series by enumeration; the published form is " + IMAGINARY_MU_PUBLISHED
             + ", a factor 2 larger"]
    return _finish(f"O_-{m}", 3, cc.lam, cc.mu, comps, degree_range, notes)


def _report_real3(m, degree_range):
    from .classnum import class_number_quadratic, field_discriminant
    from .ideals import class_group_of, galois_orbit_counts

    if m <= 1 or not is_squarefree(m) or m % 3 == 0:
        raise UnsupportedCase(f"need a squarefree m > 1 with 3 not dividing m, got {m}")
    if class_number_quadratic(field_discriminant(m)).h != 1:
        raise UnsupportedCase(f"O_{m} is not a principal ideal domain")
    c = real_case_reduction_image(m).orbits.count
    cg = class_group_of(make_cyclo_order(make_order(m), 3))
    h_mu, h_lam = galois_orbit_counts(cg)
    comps = [
        _component("lambda", "Z^2 x mu_3", c * h_lam, cyclic_model(3, 2)),
        _component("mu", "Z^2 x (mu_3 x| Z/2)", c * h_mu, dihedral_model(3, 2, False)),
    ]
    notes = [f"c={c} h={cg.order_h} h_mu={h_mu} h_lambda={h_lam}"]
    return _finish(f"O_{m}", 3, c * h_lam, c * h_mu, comps, degree_range, notes)


def _report_sqrt5(degree_range):
    O = make_cyclo_order(make_order(5), 5)
    c = len(_orbits(O))
    h = class_number_cyclotomic(5)
    # a single ideal class is fixed by the Galois group
    comps = [_component("mu", "Z^2 x (mu_5 x| Z/2)", c * h, dihedral_model(5, 2, False))]
    return _finish("O_5", 5, 0, c * h, comps, degree_range, [f"c={c} h={h}"])


def _orbits(O):
    from .units import orbits_under

    return orbits_under(reduction_image_of(O)).orbits


def _report_sqrt_m7(degree_range):
    h = class_number_cyclotomic(7)
    comps = [_component("galois3", "(Z^2 x mu_14) x| Z/3", h, seven_torsion_model())]
    notes = ["Galois group of order 3: no dihedral overgroup, counted under lambda",
             "series in nonnegative degrees"]
    return _finish("O_-7", 7, h, 0, comps, degree_range, notes)

