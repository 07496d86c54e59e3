"""Exact arithmetic in rings of integers of quadratic fields.

Elements of the order of Q(sqrt d) are stored as a + b*w with integer
coordinates, where w = sqrt(d) for d = 2, 3 mod 4 and w = (1 + sqrt(d))/2
for d = 1 mod 4.  Everything is plain Python integers; no floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import InvalidInput, UnsupportedCase


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1
    return True


@dataclass(frozen=True)
class QuadOrder:
    """The maximal order of Q(sqrt d)."""

    d: int

    def __post_init__(self):
        if self.d in (0, 1) or not is_squarefree(self.d):
            raise InvalidInput(f"d={self.d} must be squarefree and not 0 or 1")

    @property
    def omega_kind(self) -> str:
        return "half" if self.d % 4 == 1 else "sqrt"

    @property
    def t(self) -> int:
        # w^2 = t*w + n
        return 1 if self.d % 4 == 1 else 0

    @property
    def n(self) -> int:
        return (self.d - 1) // 4 if self.d % 4 == 1 else self.d

    @property
    def discriminant(self) -> int:
        return self.d if self.d % 4 == 1 else 4 * self.d

    @property
    def is_imaginary(self) -> bool:
        return self.d < 0

    def __call__(self, a: int = 0, b: int = 0) -> "QuadInt":
        return QuadInt(a, b, self)

    @property
    def one(self) -> "QuadInt":
        return QuadInt(1, 0, self)

    @property
    def zero(self) -> "QuadInt":
        return QuadInt(0, 0, self)

    @property
    def omega(self) -> "QuadInt":
        return QuadInt(0, 1, self)

    def sqrt_d(self) -> "QuadInt":
        return QuadInt(-1, 2, self) if self.omega_kind == "half" else QuadInt(0, 1, self)

    def from_sqrt(self, p: int, q: int, den: int = 1) -> "QuadInt":
        """(p + q*sqrt d)/den, which must be integral."""
        if self.omega_kind == "half":
            a, b = p - q, 2 * q
        else:
            a, b = p, q
        if a % den or b % den:
            raise InvalidInput(f"({p}+{q}*sqrt({self.d}))/{den} is not integral")
        return QuadInt(a // den, b // den, self)

    def label(self) -> str:
        return f"Q(sqrt({self.d}))"


def make_order(d: int) -> QuadOrder:
    return QuadOrder(int(d))


@dataclass(frozen=True, slots=True)
class QuadInt:
    a: int
    b: int
    order: QuadOrder

    def _coerce(self, y) -> "QuadInt":
        if isinstance(y, QuadInt):
            if y.order != self.order:
                raise InvalidInput("mixed orders")
            return y
        if isinstance(y, int):
            return QuadInt(y, 0, self.order)
        return NotImplemented

    def __add__(self, y):
        y = self._coerce(y)
        if y is NotImplemented:
            return y
        return QuadInt(self.a + y.a, self.b + y.b, self.order)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(-self.a, -self.b, self.order)

    def __sub__(self, y):
        y = self._coerce(y)
        if y is NotImplemented:
            return y
        return QuadInt(self.a - y.a, self.b - y.b, self.order)

    def __rsub__(self, y):
        return -(self - y)

    def __mul__(self, y):
        if isinstance(y, int):
            return QuadInt(self.a * y, self.b * y, self.order)
        y = self._coerce(y)
        if y is NotImplemented:
            return y
        o = self.order
        bb = self.b * y.b
        return QuadInt(self.a * y.a + bb * o.n,
                       self.a * y.b + self.b * y.a + bb * o.t, o)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        r, x = self.order.one, self
        while k:
            if k & 1:
                r = r * x
            x = x * x
            k >>= 1
        return r

    def __bool__(self):
        return bool(self.a or self.b)

    def conj(self) -> "QuadInt":
        o = self.order
        return QuadInt(self.a + self.b * o.t, -self.b, o)

    def norm(self) -> int:
        o = self.order
        return self.a * self.a + o.t * self.a * self.b - o.n * self.b * self.b

    def trace(self) -> int:
        return 2 * self.a + self.order.t * self.b

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def height(self) -> int:
        return max(abs(self.a), abs(self.b))

    def divexact(self, y) -> "QuadInt":
        """self / y, raising ValueError unless the quotient is integral."""
        y = self._coerce(y)
        nm = y.norm()
        if nm == 0:
            raise ZeroDivisionError("division by zero")
        z = self * y.conj()
        if z.a % nm or z.b % nm:
            raise ValueError(f"{self} is not divisible by {y}")
        return QuadInt(z.a // nm, z.b // nm, self.order)

    def inverse(self) -> "QuadInt":
        return self.order.one.divexact(self)

    def sqrt_coords(self) -> tuple[int, int, int]:
        """(p, q, den) with self = (p + q*sqrt d)/den."""
        if self.order.omega_kind == "half":
            return 2 * self.a + self.b, self.b, 2
        return self.a, self.b, 1

    def __str__(self):
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}*w"

    def __repr__(self):
        return f"QuadInt({self.a}, {self.b}, d={self.order.d})"


def norm(x: QuadInt) -> int:
    return x.norm()


def conj(x: QuadInt) -> QuadInt:
    return x.conj()


# ---------------------------------------------------------------------------
# residue rings

FIELD9 = "FiniteField9"
PRODUCT = "ProductF3xF3"
PRIME = "PrimeField"


@dataclass(frozen=True, order=True)
class Residue:
    """Element of O/(3) (F_9 or F_3 x F_3) or of a prime field F_p.

    For F_9 the value is (u, v) meaning u + v*x with x^2 = -1; for
    F_3 x F_3 it is the pair of components; for F_p it is a 1-tuple.
    """

    kind: str
    value: tuple
    p: int = 3

    def _new(self, value):
        return Residue(self.kind, value, self.p)

    def __add__(self, y: "Residue"):
        return self._new(tuple((u + v) % self.p for u, v in zip(self.value, y.value)))

    def __neg__(self):
        return self._new(tuple((-u) % self.p for u in self.value))

    def __sub__(self, y):
        return self + (-y)

    def __mul__(self, y: "Residue"):
        p = self.p
        if self.kind == FIELD9:
            (a0, a1), (b0, b1) = self.value, y.value
            return self._new(((a0 * b0 - a1 * b1) % p, (a0 * b1 + a1 * b0) % p))
        return self._new(tuple((u * v) % p for u, v in zip(self.value, y.value)))

    def __pow__(self, k: int):
        r = self.one()
        for _ in range(k):
            r = r * self
        return r

    def one(self) -> "Residue":
        if self.kind == FIELD9:
            return self._new((1, 0))
        return self._new((1,) * len(self.value))

    def zero(self) -> "Residue":
        return self._new((0,) * len(self.value))

    def is_zero(self) -> bool:
        return not any(self.value)

    def is_unit(self) -> bool:
        if self.kind == PRODUCT:
            return all(self.value)
        return not self.is_zero()

    def __str__(self):
        if self.kind == FIELD9:
            u, v = self.value
            return f"{u}+{v}x"
        if self.kind == PRODUCT:
            return "({},{})".format(*self.value)
        return str(self.value[0])


ResidueMod3 = Residue


def residue_ring_mod3(order: QuadOrder) -> str:
    if order.d % 3 == 0:
        raise UnsupportedCase(f"3 divides d={order.d}: no relative integral basis")
    return PRODUCT if order.d % 3 == 1 else FIELD9


def all_residues(kind: str, p: int = 3) -> list[Residue]:
    """All residues of the given ring in canonical (lexicographic) order."""
    if kind == PRIME:
        return [Residue(kind, (u,), p) for u in range(p)]
    return [Residue(kind, (u, v), 3) for u in range(3) for v in range(3)]


def reduce_mod3(x: QuadInt) -> Residue:
    """Reduction O -> O/(3).

    When X^2 - d splits mod 3 the components are evaluation at
    sqrt(d) = 1 and sqrt(d) = -1, so sqrt(-m) maps to (1, -1).  Otherwise
    O/(3) = F_3[x]/(x^2 + 1) with x the image of sqrt(d).
    """
    o = x.order
    kind = residue_ring_mod3(o)
    half = o.omega_kind == "half"
    if kind == PRODUCT:
        comps = []
        for s in (1, -1):
            w = 2 * (1 + s) if half else s
            comps.append((x.a + x.b * w) % 3)
        return Residue(kind, tuple(comps))
    if half:
        # w = (1 + x)/2 = 2 + 2x
        return Residue(kind, ((x.a + 2 * x.b) % 3, (2 * x.b) % 3))
    return Residue(kind, (x.a % 3, x.b % 3))


def reduce_mod_ramified(x: QuadInt, ell: int) -> Residue:
    """Reduction to O/P = F_ell for the prime P above a prime ell ramified in O."""
    o = x.order
    if o.discriminant % ell:
        raise UnsupportedCase(f"{ell} is not ramified in {o.label()}")
    r = _double_root(o, ell)
    return Residue(PRIME, ((x.a + x.b * r) % ell,), ell)


def _double_root(o: QuadOrder, p: int) -> int:
    for r in range(p):
        if (r * r - o.t * r - o.n) % p == 0 and (2 * r - o.t) % p == 0:
            return r
    raise UnsupportedCase(f"no double root of the minimal polynomial of w mod {p}")


def lift_residue(r: Residue, order: QuadOrder) -> QuadInt:
    """A small element of O reducing to r (ties broken by coordinate order)."""
    best = None
    for a in (0, 1, -1):
        for b in (0, 1, -1):
            x = QuadInt(a, b, order)
            if r.kind == PRIME:
                ok = reduce_mod_ramified(x, r.p) == r
            else:
                ok = reduce_mod3(x) == r
            if ok:
                key = (abs(a) + abs(b), abs(b), -a, -b)
                if best is None or key < best[0]:
                    best = (key, x)
    if best is None:
        raise InvalidInput(f"residue {r} has no small lift")
    return best[1]


# ---------------------------------------------------------------------------
# fundamental units of real quadratic orders


@dataclass(frozen=True)
class RealFundamentalUnit:
    unit: QuadInt
    regulator_proxy: int


def _floor_quadratic(P: int, Q: int, D: int) -> int:
    """floor((P + sqrt D)/Q) for non-square D."""
    s = isqrt(D)
    if Q > 0:
        return (P + s) // Q
    return -((P + s) // (-Q)) - 1


def continued_fraction_w(order: QuadOrder):
    """Partial quotients of w, together with the period length."""
    D = order.d
    if D <= 0:
        raise InvalidInput("continued fractions need d > 0")
    P, Q = (1, 2) if order.omega_kind == "half" else (0, 1)
    seen = {}
    quotients = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(quotients)
        a = _floor_quadratic(P, Q, D)
        quotients.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    start = seen[(P, Q)]
    return quotients, len(quotients) - start


def fundamental_unit_real(order: QuadOrder) -> RealFundamentalUnit:
    """Fundamental unit (> 1) of a real quadratic order from the CF of w.

    The first convergent p/q of w with N(p - q*w) = +-1 gives the unit
    conj(p - q*w), which is the smallest unit exceeding 1.
    """
    if order.d <= 0:
        raise InvalidInput("fundamental_unit_real needs d > 0")
    quotients, period = continued_fraction_w(order)
    pre = len(quotients) - period
    p0, p1, q0, q1 = 0, 1, 1, 0
    k = 0
    while True:
        a = quotients[k] if k < len(quotients) else quotients[pre + (k - pre) % period]
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
        x = QuadInt(p1, -q1, order)
        if abs(x.norm()) == 1:
            unit = x.conj()
            return RealFundamentalUnit(unit, period)
        k += 1


def units_mod_sign(order: QuadOrder) -> list[QuadInt]:
    """Generators of O^x: -1, plus w-type roots of unity or the fundamental unit."""
    gens = [QuadInt(-1, 0, order)]
    if order.d > 0:
        gens.append(fundamental_unit_real(order).unit)
    elif order.d == -1:
        gens.append(order.omega)
    elif order.d == -3:
        gens.append(order.omega)
    return gens


def content(x: QuadInt) -> int:
    return gcd(x.a, x.b)
