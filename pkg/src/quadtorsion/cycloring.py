"""The order O_K[zeta_l] as a free O_K-module with basis 1, zeta, ...

Supported pairs: (Q(sqrt d), 3) with 3 not dividing d, (Q(sqrt 5), 5) and
(Q(sqrt -7), 7).  Coefficients of Psi_l are written in the w-basis of O_K,
so all arithmetic stays integral.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import UnsupportedCase
from .quadring import QuadInt, QuadOrder, Residue, reduce_mod3, reduce_mod_ramified


@dataclass(frozen=True)
class CycloOrder:
    base: QuadOrder
    ell: int
    degree: int
    psi: tuple  # (p_0, ..., p_{deg-1}): Psi = T^deg + sum p_i T^i
    galois_power: int  # sigma(zeta) = zeta^galois_power

    @property
    def rank(self) -> int:
        return 2 * self.degree

    def elem(self, *coords) -> "CycloElem":
        o = self.base
        cs = [c if isinstance(c, QuadInt) else QuadInt(c, 0, o) for c in coords]
        cs += [o.zero] * (self.degree - len(cs))
        return CycloElem(tuple(cs), self)

    @property
    def one(self) -> "CycloElem":
        return self.elem(1)

    @property
    def zero(self) -> "CycloElem":
        return self.elem(0)

    @property
    def zeta(self) -> "CycloElem":
        return self.elem(0, 1)

    def embed(self, x: QuadInt) -> "CycloElem":
        return self.elem(x)

    def from_vector(self, v) -> "CycloElem":
        """Element with integer coordinates on the Z-basis w^j * zeta^i."""
        o = self.base
        return CycloElem(tuple(QuadInt(v[2 * i], v[2 * i + 1], o) for i in range(self.degree)), self)

    def basis(self) -> list["CycloElem"]:
        out = []
        for i in range(self.rank):
            v = [0] * self.rank
            v[i] = 1
            out.append(self.from_vector(v))
        return out

    def label(self) -> str:
        return f"{self.base.label()}[zeta_{self.ell}]"


@dataclass(frozen=True, slots=True)
class CycloElem:
    coords: tuple
    order: CycloOrder

    def _coerce(self, y):
        if isinstance(y, CycloElem):
            return y
        if isinstance(y, (int, QuadInt)):
            return self.order.elem(y)
        return NotImplemented

    def __add__(self, y):
        y = self._coerce(y)
        return CycloElem(tuple(a + b for a, b in zip(self.coords, y.coords)), self.order)

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(tuple(-a for a in self.coords), self.order)

    def __sub__(self, y):
        return self + (-self._coerce(y))

    def __rsub__(self, y):
        return -(self - y)

    def __mul__(self, y):
        y = self._coerce(y)
        O = self.order
        deg = O.degree
        zero = O.base.zero
        prod = [zero] * (2 * deg - 1)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(y.coords):
                if b:
                    prod[i + j] = prod[i + j] + a * b
        # reduce T^k for k >= deg using T^deg = -sum p_i T^i
        for k in range(2 * deg - 2, deg - 1, -1):
            c = prod[k]
            if not c:
                continue
            prod[k] = zero
            for i, p in enumerate(O.psi):
                prod[k - deg + i] = prod[k - deg + i] - c * p
        return CycloElem(tuple(prod[:deg]), O)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        r, x = self.order.one, self
        while k:
            if k & 1:
                r = r * x
            x = x * x
            k >>= 1
        return r

    def __bool__(self):
        return any(bool(c) for c in self.coords)

    def vector(self) -> list[int]:
        out = []
        for c in self.coords:
            out += [c.a, c.b]
        return out

    def base_part(self) -> QuadInt:
        if any(self.coords[1:]):
            raise ValueError(f"{self} does not lie in the base order")
        return self.coords[0]

    def height(self) -> int:
        return max(abs(v) for v in self.vector())

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                terms.append(f"({c})" + ("" if i == 0 else "*z" if i == 1 else f"*z^{i}"))
        return " + ".join(terms) if terms else "0"


def make_cyclo_order(base: QuadOrder, ell: int) -> CycloOrder:
    d = base.d
    if ell == 3:
        if d % 3 == 0:
            raise UnsupportedCase(f"3 divides d={d}: O_K[zeta_3] has no relative integral basis")
        one = QuadInt(1, 0, base)
        return CycloOrder(base, 3, 2, (one, one), 2)
    if ell == 5 and d == 5:
        w = base.omega  # (1 + sqrt 5)/2
        # Psi_5 = T^2 - ((sqrt5 - 1)/2) T + 1 with (sqrt5 - 1)/2 = w - 1
        return CycloOrder(base, 5, 2, (QuadInt(1, 0, base), -(w - 1)), 4)
    if ell == 7 and d == -7:
        w = base.omega  # (1 + sqrt -7)/2
        # Psi_7 = T^3 + (1 - w) T^2 - w T - 1
        return CycloOrder(base, 7, 3, (QuadInt(-1, 0, base), -w, 1 - w), 2)
    raise UnsupportedCase(f"unsupported pair (Q(sqrt({d})), {ell})")


def psi_polynomial(O: CycloOrder) -> list[QuadInt]:
    """Coefficients of Psi from degree 0 up to the leading 1."""
    return list(O.psi) + [O.base.one]


def poly_mul(f, g, zero):
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out


def galois_sigma(x: CycloElem) -> CycloElem:
    """The generator of Gal(K(zeta)/K): zeta -> zeta^g, base fixed."""
    O = x.order
    z = O.zeta ** O.galois_power
    acc = O.zero
    zp = O.one
    for c in x.coords:
        if c:
            acc = acc + zp * c
        zp = zp * z
    return acc


def zeta_inverse_power(O: CycloOrder) -> CycloElem:
    return O.zeta ** (O.ell - 1)


def complex_conj(x: CycloElem) -> CycloElem:
    """Complex conjugation: zeta -> zeta^-1, and conjugation on an imaginary base."""
    O = x.order
    zi = zeta_inverse_power(O)
    acc = O.zero
    zp = O.one
    for c in x.coords:
        if c:
            acc = acc + zp * (c.conj() if O.base.d < 0 else c)
        zp = zp * zi
    return acc


def base_conj(x: CycloElem) -> CycloElem:
    """Coefficientwise conjugation of the base (an automorphism when Psi has rational coefficients)."""
    O = x.order
    if O.ell != 3:
        raise UnsupportedCase("coefficientwise base conjugation needs Psi over Q")
    return CycloElem(tuple(c.conj() for c in x.coords), O)


def relative_norm(x: CycloElem) -> QuadInt:
    acc = x
    y = x
    for _ in range(x.order.degree - 1):
        y = galois_sigma(y)
        acc = acc * y
    return acc.base_part()


def relative_trace(x: CycloElem) -> QuadInt:
    acc = x
    y = x
    for _ in range(x.order.degree - 1):
        y = galois_sigma(y)
        acc = acc + y
    return acc.base_part()


def absolute_norm(x: CycloElem) -> int:
    return relative_norm(x).norm()


def absolute_trace(x: CycloElem) -> int:
    return relative_trace(x).trace()


def trace_form_gram(O: CycloOrder) -> list[list[int]]:
    """Gram matrix of T(x) = Tr(x * conj(x)) on the Z-basis; positive definite."""
    B = O.basis()
    cb = [complex_conj(b) for b in B]
    return [[absolute_trace(B[i] * cb[j]) for j in range(len(B))] for i in range(len(B))]


def trace_form(x: CycloElem) -> int:
    return absolute_trace(x * complex_conj(x))


def reduce_mod_zeta_minus_1(x: CycloElem) -> Residue:
    """zeta -> 1, then reduce the base element modulo the prime(s) over l."""
    O = x.order
    s = O.base.zero
    for c in x.coords:
        s = s + c
    if O.ell == 3:
        return reduce_mod3(s)
    return reduce_mod_ramified(s, O.ell)


# ---------------------------------------------------------------------------
# exact square roots, for l = 3


@dataclass(frozen=True)
class _KElt:
    """p + q*sqrt(d) with rational p, q."""

    p: Fraction
    q: Fraction
    d: int

    def __add__(self, y):
        return _KElt(self.p + y.p, self.q + y.q, self.d)

    def __sub__(self, y):
        return _KElt(self.p - y.p, self.q - y.q, self.d)

    def __mul__(self, y):
        if isinstance(y, (int, Fraction)):
            return _KElt(self.p * y, self.q * y, self.d)
        return _KElt(self.p * y.p + self.d * self.q * y.q, self.p * y.q + self.q * y.p, self.d)

    def norm(self):
        return self.p * self.p - self.d * self.q * self.q

    def inv(self):
        n = self.norm()
        return _KElt(self.p / n, -self.q / n, self.d)

    def is_zero(self):
        return self.p == 0 and self.q == 0


def _rational_sqrt(x: Fraction):
    if x < 0:
        return None
    a, b = x.numerator, x.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def _k_sqrt(x: _KElt):
    """A square root of x in Q(sqrt d), or None."""
    d = x.d
    if x.is_zero():
        return x
    if x.q == 0:
        r = _rational_sqrt(x.p)
        if r is not None:
            return _KElt(r, Fraction(0), d)
        r = _rational_sqrt(x.p / d)
        if r is not None:
            return _KElt(Fraction(0), r, d)
        return None
    s = _rational_sqrt(x.norm())
    if s is None:
        return None
    for sgn in (1, -1):
        a2 = (x.p + sgn * s) / 2
        a = _rational_sqrt(a2)
        if a is None or a == 0:
            continue
        b = x.q / (2 * a)
        cand = _KElt(a, b, d)
        if (cand * cand) == x:
            return cand
    return None


def _to_k(c: QuadInt) -> _KElt:
    p, q, den = c.sqrt_coords()
    return _KElt(Fraction(p, den), Fraction(q, den), c.order.d)


def _from_k(x: _KElt, o: QuadOrder):
    """Integral element of O equal to x, or None."""
    # p + q sqrt d with w = sqrt d or (1 + sqrt d)/2
    if o.omega_kind == "half":
        b = 2 * x.q
        a = x.p - x.q
    else:
        a, b = x.p, x.q
    if a.denominator != 1 or b.denominator != 1:
        return None
    return QuadInt(int(a), int(b), o)


def sqrt_in_order(beta: CycloElem):
    """A square root of beta in O_K[zeta_3], or None.

    Writing eta = c0 + c1*zeta, eta^2 = beta becomes, with X = c1^2,
    3X^2 - (2 b1 - 4 b0) X - b1^2 = 0 and c0 = (b1/c1 + c1)/2, solved in K.
    """
    O = beta.order
    if O.ell != 3:
        raise UnsupportedCase("square roots are implemented for l = 3")
    o = O.base
    b0, b1 = _to_k(beta.coords[0]), _to_k(beta.coords[1])
    zero = _KElt(Fraction(0), Fraction(0), o.d)
    cands = []
    # c1 = 0: then b1 must vanish and c0^2 = b0
    if b1.is_zero():
        r = _k_sqrt(b0)
        if r is not None:
            cands.append((r, zero))
    B = b1 * 2 - b0 * 4
    disc = B * B + b1 * b1 * 12
    sd = _k_sqrt(disc)
    if sd is not None:
        for sgn in (1, -1):
            X = (B + sd * sgn) * Fraction(1, 6)
            if X.is_zero():
                continue
            c1 = _k_sqrt(X)
            if c1 is None:
                continue
            c0 = (b1 * c1.inv() + c1) * Fraction(1, 2)
            cands.append((c0, c1))
    for c0, c1 in cands:
        a0, a1 = _from_k(c0, o), _from_k(c1, o)
        if a0 is None or a1 is None:
            continue
        eta = CycloElem((a0, a1), O)
        if eta * eta == beta:
            return eta
    return None
