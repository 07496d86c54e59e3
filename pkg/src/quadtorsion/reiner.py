"""Order-3 matrices in GL_3 over imaginary quadratic orders and their
Reiner invariants.

A matrix A of order 3 makes M = O^3 a module over O[C_3].  The kernel M_N
of the norm element N = 1 + A + A^2 is a rank one O[zeta_3]-module (zeta
acting as A), M/M_N is a rank one O-module, and the extension between
them is recorded by a coefficient in O[zeta]/(zeta - 1) = O/(3), defined up
to the action of global units.  Together with the ideal class of M_N these
data determine the conjugacy class of A.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import lattice
from .classnum import class_number_quadratic, class_number_cyclotomic, field_discriminant
from .cycloring import make_cyclo_order, reduce_mod_zeta_minus_1
from .errors import InvalidInput, UnsupportedCase
from .ideals import (class_group, class_of, galois_orbit_counts, ideal_from_basis,
                     is_principal)
from .quadring import QuadInt, QuadOrder, Residue, is_squarefree, lift_residue, make_order
from .units import canonical_orbit_rep, orbit_count, orbit_representatives, quartic_order


# ---------------------------------------------------------------------------
# 3x3 matrices over a quadratic order


@dataclass(frozen=True)
class Mat3:
    entries: tuple  # 3 rows of 3 QuadInt
    order_ring: QuadOrder

    @classmethod
    def build(cls, rows, order: QuadOrder) -> "Mat3":
        """Entries may be QuadInt, int or an (a, b) pair meaning a + b*w."""
        def conv(x):
            if isinstance(x, QuadInt):
                return x
            if isinstance(x, int):
                return QuadInt(x, 0, order)
            return QuadInt(x[0], x[1], order)
        return cls(tuple(tuple(conv(x) for x in row) for row in rows), order)

    @classmethod
    def identity(cls, order: QuadOrder) -> "Mat3":
        return cls.build([[int(i == j) for j in range(3)] for i in range(3)], order)

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def __mul__(self, B: "Mat3") -> "Mat3":
        o = self.order_ring
        rows = []
        for i in range(3):
            row = []
            for j in range(3):
                s = o.zero
                for k in range(3):
                    s = s + self.entries[i][k] * B.entries[k][j]
                row.append(s)
            rows.append(tuple(row))
        return Mat3(tuple(rows), o)

    def __add__(self, B):
        return Mat3(tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, B.entries)),
                    self.order_ring)

    def __sub__(self, B):
        return Mat3(tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.entries, B.entries)),
                    self.order_ring)

    def __pow__(self, k: int) -> "Mat3":
        if k < 0:
            return self.inverse() ** (-k)
        r, x = Mat3.identity(self.order_ring), self
        while k:
            if k & 1:
                r = r * x
            x = x * x
            k >>= 1
        return r

    def det(self) -> QuadInt:
        a = self.entries
        return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))

    def trace(self) -> QuadInt:
        return self.entries[0][0] + self.entries[1][1] + self.entries[2][2]

    def charpoly(self) -> tuple:
        """(trace, second elementary symmetric function, det)."""
        a = self.entries
        e2 = (a[0][0] * a[1][1] - a[0][1] * a[1][0] + a[0][0] * a[2][2] - a[0][2] * a[2][0]
              + a[1][1] * a[2][2] - a[1][2] * a[2][1])
        return self.trace(), e2, self.det()

    def adjugate(self) -> "Mat3":
        a = self.entries

        def minor(i, j):
            r = [k for k in range(3) if k != i]
            c = [k for k in range(3) if k != j]
            return a[r[0]][c[0]] * a[r[1]][c[1]] - a[r[0]][c[1]] * a[r[1]][c[0]]
        rows = [[minor(j, i) * (1 if (i + j) % 2 == 0 else -1) for j in range(3)] for i in range(3)]
        return Mat3.build(rows, self.order_ring)

    def is_invertible(self) -> bool:
        return self.det().is_unit()

    def inverse(self) -> "Mat3":
        d = self.det()
        if not d.is_unit():
            raise InvalidInput("matrix is not invertible over the order")
        di = d.inverse()
        adj = self.adjugate()
        return Mat3(tuple(tuple(x * di for x in row) for row in adj.entries), self.order_ring)

    def height(self) -> int:
        return max(x.height() for row in self.entries for x in row)

    def apply(self, v: list) -> list:
        """A*v for a column vector of three QuadInt."""
        o = self.order_ring
        out = []
        for i in range(3):
            s = o.zero
            for k in range(3):
                s = s + self.entries[i][k] * v[k]
            out.append(s)
        return out

    def zmatrix(self) -> list[list[int]]:
        """The 6x6 integer matrix of A on O^3 = Z^6 (coordinates x_0.a, x_0.b, x_1.a, ...)."""
        o = self.order_ring
        Z = [[0] * 6 for _ in range(6)]
        for i in range(3):
            for j in range(3):
                x = self.entries[i][j]
                Z[2 * i][2 * j] = x.a
                Z[2 * i][2 * j + 1] = o.n * x.b
                Z[2 * i + 1][2 * j] = x.b
                Z[2 * i + 1][2 * j + 1] = x.a + o.t * x.b
        return Z

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def _matvec(Z, v):
    return [sum(a * b for a, b in zip(row, v)) for row in Z]


def _omega_vec(o: QuadOrder, v):
    out = []
    for k in range(0, len(v), 2):
        x, y = v[k], v[k + 1]
        out += [o.n * y, x + o.t * y]
    return out


def elementary(i: int, j: int, x: QuadInt) -> Mat3:
    """e_ij(x): identity plus x in position (i, j), 1-based as in the literature."""
    o = x.order
    rows = [[o(int(r == c)) for c in range(3)] for r in range(3)]
    rows[i - 1][j - 1] = rows[i - 1][j - 1] + x
    return Mat3.build(rows, o)


def matrix_order(A: Mat3, cap: int = 12):
    I = Mat3.identity(A.order_ring)
    P = A
    for k in range(1, cap + 1):
        if P == I:
            return k
        P = P * A
    return None


@dataclass(frozen=True)
class NormOperator:
    matrix: Mat3

    @classmethod
    def of(cls, A: Mat3, ell: int = 3) -> "NormOperator":
        N = Mat3.build([[0] * 3] * 3, A.order_ring)
        P = Mat3.identity(A.order_ring)
        for _ in range(ell):
            N = N + P
            P = P * A
        return cls(N)


# ---------------------------------------------------------------------------
# constructions


def build_matrix_principal(a: QuadInt, b: QuadInt) -> Mat3:
    o = a.order
    return Mat3.build([[0, -1, a], [1, -1, b], [0, 0, 1]], o)


def build_matrix_nonprincipal(x: QuadInt, a: QuadInt, b: QuadInt) -> Mat3:
    """The order-3 matrices over O_-5 attached to the nontrivial ideal class."""
    o = x.order
    if o.d != -5:
        raise UnsupportedCase("the nonprincipal family is defined over O_-5 only")
    s = o.sqrt_d()
    rows = [
        [(1 - s) * x - 8, o(3), (s + 2) * x - s * 3 + 3],
        [-3 - (1 + s) * a + b * 2, o(1), -s + 1 + a * 3 + (s - 1) * b],
        [x * 2 - s * 3 - 3, s + 1, (s - 1) * x + 7],
    ]
    return Mat3.build(rows, o)


def principal_representatives(m: int) -> list[Mat3]:
    """One matrix [[0,-1,a],[1,-1,0],[0,0,1]] per unit orbit on O/(3)."""
    o = make_order(-m)
    return [build_matrix_principal(lift_residue(r, o), o.zero) for r in orbit_representatives(m)]


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class ReinerInvariants:
    r: int
    s: int
    det_class: int
    c_orbit: Residue | None

    def label(self) -> str:
        c = "?" if self.c_orbit is None else str(self.c_orbit)
        return f"r={self.r} s={self.s} class={self.det_class} c={c}"


def _base_m(o: QuadOrder) -> int:
    if o.d >= 0:
        raise UnsupportedCase("Reiner invariants are implemented over imaginary quadratic orders")
    m = -o.d
    if m % 3 == 0:
        raise UnsupportedCase(f"3 divides m={m}: O_-m[zeta_3] is not maximal")
    return m


def _rational_coords(vectors, target):
    sol = lattice.solve_rational(vectors, target)
    if sol is None:
        raise AssertionError("vector outside the expected span")
    return sol


def compute_invariants(A: Mat3, allow_partial: bool = False, cap: int = 200) -> ReinerInvariants:
    """Reiner invariants of an order-3 matrix A.

    The base order need not be a PID; UnsupportedCase is raised when M_N or
    M/M_N is not free (with allow_partial, a non-free M_N gives c_orbit None).
    """
    o = A.order_ring
    m = _base_m(o)
    if matrix_order(A, 3) != 3:
        raise InvalidInput("matrix does not have order 3")
    O = quartic_order(m)
    ZA = A.zmatrix()
    ZN = NormOperator.of(A).matrix.zmatrix()

    # M_N as an O[zeta]-lattice relative to a vector v
    KN = lattice.kernel(ZN)
    if len(KN) != 4:
        raise UnsupportedCase(f"M_N has Z-rank {len(KN)}; only (r, s) = (1, 1) is handled")
    r, s = 1, 1
    v = KN[0]
    Av = _matvec(ZA, v)
    frame = [v, _omega_vec(o, v), Av, _omega_vec(o, Av)]
    coords = [_rational_coords(frame, k) for k in KN]
    D = lcm(*(c.denominator for row in coords for c in row))
    I = ideal_from_basis([[int(c * D) for c in row] for row in coords], O)
    det_class = class_of(class_group(m, cap), I)
    g = is_principal(I)
    if g is None:
        if allow_partial:
            return ReinerInvariants(r, s, det_class, None)
        raise UnsupportedCase("M_N is not a free O[zeta_3]-module (nonprincipal class)")
    gv = g.vector()
    w = [sum(gv[i] * frame[i][k] for i in range(4)) for k in range(6)]
    if any(x % D for x in w):
        raise AssertionError("generator of M_N is not integral")
    v0 = [x // D for x in w]

    # generator of N(M), a rank one O-module inside the fixed line
    KF = lattice.kernel([[ZA[i][j] - int(i == j) for j in range(6)] for i in range(6)])
    f = KF[0]
    fframe = [f, _omega_vec(o, f)]
    cols = [[ZN[i][j] for i in range(6)] for j in range(6)]
    mus = [_rational_coords(fframe, c) for c in cols]
    D2 = lcm(*(c.denominator for row in mus for c in row))
    J = ideal_from_basis([[int(c * D2) for c in row] for row in mus], o)
    h = is_principal(J)
    if h is None:
        raise UnsupportedCase("M/M_N is not a free O-module")
    n0 = [h.a * x + h.b * y for x, y in zip(f, _omega_vec(o, f))]
    if any(x % D2 for x in n0):
        raise AssertionError("generator of N(M) is not integral")
    n0 = [x // D2 for x in n0]
    x0 = lattice.solve_integer(cols, n0)
    if x0 is None:
        raise AssertionError("N(M) generator has no preimage")

    # extension coefficient: (A - 1) x0 = y * v0 with y in O[zeta]
    beta = [p - q for p, q in zip(_matvec(ZA, x0), x0)]
    Av0 = _matvec(ZA, v0)
    y = lattice.solve_integer([v0, _omega_vec(o, v0), Av0, _omega_vec(o, Av0)], beta)
    if y is None:
        raise AssertionError("(A - 1) x0 is not in M_N")
    c = reduce_mod_zeta_minus_1(O.from_vector(y))
    return ReinerInvariants(r, s, det_class, canonical_orbit_rep(O, c))


# ---------------------------------------------------------------------------
# brute-force conjugacy


def _intertwiner_lattice(A: Mat3, B: Mat3):
    """Z-basis of {P : P A = B P} in the 18 coordinates of P."""
    o = A.order_ring
    cols = []
    for idx in range(18):
        e = [[o.zero] * 3 for _ in range(3)]
        i, rest = divmod(idx, 6)
        j, k = divmod(rest, 2)
        e[i][j] = o(1 - k, k)
        P = Mat3.build(e, o)
        C = P * A - B * P
        cols.append([c for row in C.entries for x in row for c in (x.a, x.b)])
    M = [[cols[j][i] for j in range(18)] for i in range(18)]
    return lattice.kernel(M)


def _mat_from_coords(v, o: QuadOrder) -> Mat3:
    return Mat3.build([[(v[6 * i + 2 * j], v[6 * i + 2 * j + 1]) for j in range(3)] for i in range(3)], o)


def brute_force_conjugate(A: Mat3, B: Mat3, height: int):
    """P in GL_3(O) with coordinate height <= height and P A = B P, or None.

    Complete: the box of that height lies in the Euclidean ball of radius^2
    18*height^2, which is enumerated exactly in the intertwiner lattice.
    """
    if A.charpoly() != B.charpoly():
        return None
    o = A.order_ring
    K = _intertwiner_lattice(A, B)
    if not K:
        return None
    G = [[int(i == j) for j in range(18)] for i in range(18)]
    for v, _ in lattice.lattice_short_vectors(K, G, 18 * height * height):
        if max(abs(x) for x in v) > height:
            continue
        P = _mat_from_coords(v, o)
        if P.det().is_unit():
            return P
    return None


def random_unimodular(o: QuadOrder, rng, steps: int = 4, height: int = 2) -> Mat3:
    """A product of random elementary and permutation matrices, entries of height <= height."""
    while True:
        P = Mat3.identity(o)
        for _ in range(steps):
            i, j = rng.sample(range(1, 4), 2)
            x = o(rng.randint(-1, 1), rng.randint(-1, 1))
            Q = P * elementary(i, j, x)
            if Q.height() <= height:
                P = Q
        if P.height() <= height:
            return P


# ---------------------------------------------------------------------------
# counts and descriptors


def check_theorem_hypotheses(m: int):
    if m <= 0 or not is_squarefree(m):
        raise InvalidInput(f"m={m} must be a positive squarefree integer")
    if m % 3 == 0:
        raise UnsupportedCase(f"3 divides m={m}")
    if class_number_quadratic(field_discriminant(-m)).h != 1:
        raise UnsupportedCase(f"O_-{m} is not a principal ideal domain")


@dataclass(frozen=True)
class ConjugacyCount:
    m: int
    c: int
    h: int
    h_mu: int
    h_lambda: int

    @property
    def lam(self) -> int:
        return self.c * self.h_lambda

    @property
    def mu(self) -> int:
        return self.c * self.h_mu

    @property
    def embeddings(self) -> int:
        return self.c * self.h


def conjugacy_decomposition(m: int, ell: int = 3, cap: int = 200) -> ConjugacyCount:
    if ell != 3:
        raise UnsupportedCase("conjugacy counts are implemented for l = 3")
    check_theorem_hypotheses(m)
    cg = class_group(m, cap)
    h_mu, h_lam = galois_orbit_counts(cg)
    return ConjugacyCount(m, orbit_count(m).count, cg.order_h, h_mu, h_lam)


def count_conjugacy_classes(m: int, ell: int = 3) -> tuple[int, int]:
    """(lambda, mu): order-3 subgroups without / with a dihedral overgroup."""
    cc = conjugacy_decomposition(m, ell)
    return cc.lam, cc.mu


SETTINGS = ("imaginary3", "real3", "sqrt5_5", "sqrt-7_7")


@dataclass(frozen=True)
class NormalizerDescriptor:
    free_rank: int
    torsion_order: int
    extra_torsion_order: int  # n in the mu_n factors
    extra_factors: int  # how many mu_n factors split off
    has_galois_flip: bool
    galois_order: int
    fiber_condition: Residue | None

    def describe(self) -> str:
        z = "Z" if self.free_rank == 1 else f"Z^{self.free_rank}"
        if self.galois_order == 3:
            core = f"({z} x mu_{self.torsion_order}) x| Z/3"
        elif self.free_rank == 1:
            core = f"(({z} x mu_{self.torsion_order}) x| Z/2)"
        else:
            core = f"{z} x (mu_{self.torsion_order} x| Z/2)"
        if self.extra_factors == 1:
            core += f" x mu_{self.extra_torsion_order}"
        elif self.extra_factors > 1:
            core += f" x mu_{self.extra_torsion_order}^{self.extra_factors}"
        return core


def normalizer_descriptor(inv: ReinerInvariants | None, setting: str, n: int = 2) -> NormalizerDescriptor:
    """Structure of the normalizer of the C_l subgroup with invariants inv.

    n is the number of roots of unity of the imaginary base (4 for m = 1).
    """
    if setting not in SETTINGS:
        raise InvalidInput(f"unknown setting {setting!r}")
    c = inv.c_orbit if inv is not None else None
    if setting == "imaginary3":
        split = c is not None and c.is_zero()
        return NormalizerDescriptor(1, 3, n, 2 if split else 1, True, 2, c)
    if setting == "real3":
        return NormalizerDescriptor(2, 3, 1, 0, True, 2, c)
    if setting == "sqrt5_5":
        return NormalizerDescriptor(2, 5, 1, 0, True, 2, c)
    return NormalizerDescriptor(2, 14, 1, 0, False, 3, c)


def admissible_torsion_primes(base: QuadOrder) -> set[int]:
    """Odd primes l with [K(zeta_l):K] equal to 2 or 3."""
    out = set()
    for ell in (3, 5, 7):
        star = ell if ell % 4 == 1 else -ell
        degree = (ell - 1) // 2 if base.d == star else ell - 1
        if degree in (2, 3):
            out.add(ell)
    return out


def count_pgl_l_z(ell: int) -> int:
    return 2 * class_number_cyclotomic(ell)


# ---------------------------------------------------------------------------
# matrix exchange format

_ENTRY = re.compile(r"^(-?\d+)([+-]\d+)\*w$")


def parse_entry(text: str, o: QuadOrder) -> QuadInt:
    t = text.strip()
    mt = _ENTRY.match(t)
    if mt:
        return QuadInt(int(mt.group(1)), int(mt.group(2)), o)
    if re.fullmatch(r"-?\d+", t):
        return QuadInt(int(t), 0, o)
    raise InvalidInput(f"cannot parse matrix entry {text!r}")


def format_matrices(m: int, mats) -> str:
    blocks = [str(A) for A in mats]
    return f"m={m}\n" + "\n\n".join(blocks) + "\n"


def parse_matrices(text: str) -> tuple[int, list[Mat3]]:
    lines = text.splitlines()
    while lines and not lines[0].strip():
        lines.pop(0)
    if not lines or not lines[0].strip().startswith("m="):
        raise InvalidInput("missing header line m=<int>")
    try:
        m = int(lines[0].strip()[2:])
    except ValueError:
        raise InvalidInput(f"bad header {lines[0]!r}") from None
    if m <= 0 or not is_squarefree(m):
        raise InvalidInput(f"m={m} is not a valid squarefree integer")
    o = make_order(-m)
    mats, rows = [], []
    for ln in lines[1:] + [""]:
        if not ln.strip():
            if rows:
                if len(rows) != 3:
                    raise InvalidInput("matrix block does not have three rows")
                mats.append(Mat3.build(rows, o))
                rows = []
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise InvalidInput(f"matrix row does not have three entries: {ln!r}")
        rows.append([parse_entry(p, o) for p in parts])
    return m, mats


# ---------------------------------------------------------------------------
# complete enumeration at small height, and a conjugacy oracle


def _pmul(o: QuadOrder):
    n, t = o.n, o.t

    def mul(x, y):
        bb = x[1] * y[1]
        return (x[0] * y[0] + n * bb, x[0] * y[1] + x[1] * y[0] + t * bb)
    return mul


def enumerate_order3(o: QuadOrder, height: int = 1) -> list[Mat3]:
    """All A in GL_3(O) of coordinate height <= height with A^3 = 1, A != 1.

    For 3x3 matrices over a field without primitive cube roots of unity,
    A^3 = 1 and A != 1 force the characteristic polynomial T^3 - 1, i.e.
    trace 0, second symmetric function 0 and det 1; those are filtered
    first and A^3 = 1 is then checked exactly.
    """
    if o.d == -3:
        raise UnsupportedCase("Q(sqrt -3) contains the cube roots of unity")
    mul = _pmul(o)
    R = range(-height, height + 1)
    elems = [(a, b) for a in R for b in R]

    def add(x, y):
        return (x[0] + y[0], x[1] + y[1])

    def sub(x, y):
        return (x[0] - y[0], x[1] - y[1])

    t = o.t

    def div(x, y):
        # exact quotient x / y in O, or None
        yc = (y[0] + t * y[1], -y[1])
        ny = mul(y, yc)[0]
        num = mul(x, yc)
        if num[0] % ny or num[1] % ny:
            return None
        return (num[0] // ny, num[1] // ny)

    box = set(elems)
    zero = (0, 0)
    out = []
    for d0 in elems:
        for d1 in elems:
            d2 = (-d0[0] - d1[0], -d0[1] - d1[1])
            if d2 not in box:
                continue
            e2diag = add(add(mul(d0, d1), mul(d0, d2)), mul(d1, d2))
            base = mul(d0, mul(d1, d2))
            for a01 in elems:
                for a10 in elems:
                    p01 = mul(a01, a10)
                    for a02 in elems:
                        for a20 in elems:
                            p02 = mul(a02, a20)
                            p12 = sub(sub(e2diag, p01), p02)
                            # det = base - d0 p12 - d2 p01 - d1 p02 + a01 a20 a12 + a02 a10 a21
                            const = sub(sub(sub(base, mul(d0, p12)), mul(d2, p01)), mul(d1, p02))
                            al, be = mul(a01, a20), mul(a02, a10)
                            for a12 in elems:
                                if a12 == zero:
                                    if p12 != zero:
                                        continue
                                    cands = elems
                                else:
                                    q = div(p12, a12)
                                    if q is None or q not in box:
                                        continue
                                    cands = (q,)
                                for a21 in cands:
                                    if add(const, add(mul(al, a12), mul(be, a21))) == (1, 0):
                                        out.append(Mat3.build(
                                            [[d0, a01, a02], [a10, d1, a12], [a20, a21, d2]], o))
    I = Mat3.identity(o)
    return [A for A in out if A != I and A * A * A == I]


def rank_mod_p(M, p: int) -> int:
    A = [[x % p for x in row] for row in M]
    r = 0
    for c in range(len(A[0])):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        r += 1
    return r


def rank_minus_one_mod3(A: Mat3) -> int:
    """F_3-rank of (A - 1) on O^3/3O^3: a conjugacy invariant."""
    return rank_mod_p((A - Mat3.identity(A.order_ring)).zmatrix(), 3)


def _small_conjugators(o: QuadOrder) -> list[tuple[Mat3, Mat3]]:
    """(P, P^-1) for elementary, permutation and diagonal unit matrices."""
    units = [u for u in (o(1), o(-1), o(0, 1), o(0, -1)) if u.is_unit()]
    out = []
    for i in range(1, 4):
        for j in range(1, 4):
            if i != j:
                for u in units:
                    out.append((elementary(i, j, u), elementary(i, j, -u)))
    for perm in ((1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)):
        P = Mat3.build([[int(perm[i] == j) for j in range(3)] for i in range(3)], o)
        out.append((P, P.inverse()))
    for k in range(3):
        for u in units:
            if u != o(1):
                rows = [[o(int(i == j)) for j in range(3)] for i in range(3)]
                rows[k][k] = u
                P = Mat3.build(rows, o)
                out.append((P, P.inverse()))
    return out


def conjugacy_partition(mats: list[Mat3], height: int = 2, probes: int = 8) -> list[list[int]]:
    """Classes of mats under conjugacy by matrices of height <= height.

    Small conjugators that keep the set closed give most identifications
    (union-find).  Remaining components are then compared with the complete
    search brute_force_conjugate, trying up to probes members of each side,
    since two components can be linked through members other than their
    roots.  Found links are genuine conjugators; a pair reported apart was
    only searched through the probed members.
    """
    index = {A: i for i, A in enumerate(mats)}
    parent = list(range(len(mats)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        a, b = find(i), find(j)
        if a != b:
            parent[max(a, b)] = min(a, b)

    if mats:
        for P, Pi in _small_conjugators(mats[0].order_ring):
            for i, A in enumerate(mats):
                j = index.get(P * A * Pi)
                if j is not None:
                    union(i, j)
    comps = {}
    for i in range(len(mats)):
        comps.setdefault(find(i), []).append(i)

    def spread(members):
        step = max(1, len(members) // probes)
        return members[::step][:probes]

    roots = sorted(comps)
    for a in range(len(roots)):
        for b in range(a + 1, len(roots)):
            if find(roots[a]) == find(roots[b]):
                continue
            pa, pb = spread(comps[roots[a]]), spread(comps[roots[b]])
            if any(brute_force_conjugate(mats[x], mats[y], height) is not None
                   for x in pa[:1] for y in pb) or any(
                    brute_force_conjugate(mats[x], mats[pb[0]], height) is not None for x in pa[1:]):
                union(roots[a], roots[b])
    classes = {}
    for i in range(len(mats)):
        classes.setdefault(find(i), []).append(i)
    return sorted(classes.values())
