"""Integer lattice tools: Hermite normal form, kernels, LLL, short vectors.

All routines are exact (Python integers and Fractions).  Dimensions in
this package are small (at most 20), so the textbook algorithms are used.
"""
from __future__ import annotations

from fractions import Fraction
from math import floor, isqrt


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) = x*a + y*b and g >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _echelon(A: list[list[int]], ncols: int) -> int:
    """Row-reduce A in place to Hermite form on its first ncols columns.

    Returns the rank r; rows r.. of A are then zero on those columns.
    """
    r = 0
    nrows = len(A)
    for col in range(ncols):
        found = False
        for i in range(r, nrows):
            if not A[i][col]:
                continue
            if not found:
                A[r], A[i] = A[i], A[r]
                found = True
                continue
            a, b = A[r][col], A[i][col]
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            ra, rb = A[r], A[i]
            A[r] = [x * u + y * v for u, v in zip(ra, rb)]
            A[i] = [ag * v - bg * u for u, v in zip(ra, rb)]
        if not found:
            continue
        if A[r][col] < 0:
            A[r] = [-u for u in A[r]]
        p = A[r][col]
        for i in range(r):
            q = A[i][col] // p
            if q:
                A[i] = [u - q * v for u, v in zip(A[i], A[r])]
        r += 1
        if r == nrows:
            break
    return r


def hnf(rows) -> list[list[int]]:
    """Canonical row Hermite normal form of the lattice spanned by rows.

    Pivots are positive, entries above a pivot lie in [0, pivot), zero
    rows are dropped.
    """
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    r = _echelon(A, len(A[0]))
    return A[:r]


def kernel(M, ncols: int | None = None) -> list[list[int]]:
    """Z-basis (in HNF) of {x : M x = 0} for an integer matrix M given by rows."""
    M = [list(r) for r in M]
    n = ncols if ncols is not None else len(M[0])
    k = len(M)
    A = [[M[i][j] for i in range(k)] + [int(j == t) for t in range(n)] for j in range(n)]
    r = _echelon(A, k)
    return hnf([row[k:] for row in A[r:]])


def solve_integer(vectors, target):
    """Integer coefficients c with sum c_i * vectors[i] = target, or None."""
    vectors = [list(v) for v in vectors]
    m = len(vectors)
    n = len(target)
    A = [v + [int(i == j) for j in range(m)] for i, v in enumerate(vectors)]
    r = _echelon(A, n)
    t = list(target)
    coef = [0] * m
    for row in A[:r]:
        col = next(j for j in range(n) if row[j])
        if t[col] % row[col]:
            return None
        q = t[col] // row[col]
        if q:
            t = [u - q * v for u, v in zip(t, row[:n])]
            coef = [u + q * v for u, v in zip(coef, row[n:])]
    if any(t):
        return None
    return coef


def solve_rational(vectors, target):
    """Rational coefficients c with sum c_i * vectors[i] = target, or None."""
    m = len(vectors)
    n = len(target)
    # columns are the vectors; augmented system n x (m+1)
    A = [[Fraction(vectors[i][j]) for i in range(m)] + [Fraction(target[j])] for j in range(n)]
    piv_cols = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, n) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(n):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv_cols.append(c)
        r += 1
    if any(A[i][m] != 0 for i in range(r, n)):
        return None
    if len(piv_cols) < m:
        raise ValueError("vectors are linearly dependent")
    sol = [Fraction(0)] * m
    for i, c in enumerate(piv_cols):
        sol[c] = A[i][m]
    return sol


def det(M) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    A = [list(r) for r in M]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if A[i][k]), None)
            if sw is None:
                return 0
            A[k], A[sw] = A[sw], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def gram_of(basis, G) -> list[list[int]]:
    """Gram matrix B G B^T of the rows of basis under the form G."""
    BG = [[sum(b[i] * G[i][j] for i in range(len(b)) if b[i]) for j in range(len(G))] for b in basis]
    return [[sum(x * y for x, y in zip(u, v)) for v in basis] for u in BG]


def _round(x: Fraction) -> int:
    return floor(x + Fraction(1, 2))


def lll(basis, G, delta=Fraction(3, 4)) -> list[list[int]]:
    """LLL-reduce the rows of basis with respect to the positive form G."""
    B = [list(b) for b in basis]
    k_dim = len(B)
    if k_dim <= 1:
        return B
    gram = gram_of(B, G)

    def gso():
        mu = [[Fraction(0)] * k_dim for _ in range(k_dim)]
        bn = [Fraction(0)] * k_dim
        for i in range(k_dim):
            for j in range(i):
                s = Fraction(gram[i][j])
                for t in range(j):
                    s -= mu[j][t] * mu[i][t] * bn[t]
                mu[i][j] = s / bn[j]
            s = Fraction(gram[i][i])
            for t in range(i):
                s -= mu[i][t] * mu[i][t] * bn[t]
            bn[i] = s
        return mu, bn

    def sub(i, j, q):
        # b_i -= q b_j, keeping gram consistent
        B[i] = [u - q * v for u, v in zip(B[i], B[j])]
        gii = gram[i][i] - 2 * q * gram[i][j] + q * q * gram[j][j]
        for t in range(k_dim):
            if t != i:
                gram[i][t] -= q * gram[j][t]
                gram[t][i] = gram[i][t]
        gram[i][i] = gii

    mu, bn = gso()
    k = 1
    while k < k_dim:
        for j in range(k - 1, -1, -1):
            q = _round(mu[k][j])
            if q:
                sub(k, j, q)
                for t in range(j):
                    mu[k][t] -= q * mu[j][t]
                mu[k][j] -= q
        if bn[k] >= (delta - mu[k][k - 1] ** 2) * bn[k - 1]:
            k += 1
        else:
            B[k], B[k - 1] = B[k - 1], B[k]
            gram[k], gram[k - 1] = gram[k - 1], gram[k]
            for row in gram:
                row[k], row[k - 1] = row[k - 1], row[k]
            mu, bn = gso()
            k = max(k - 1, 1)
    return B


def _ldl(gram):
    n = len(gram)
    q = [[Fraction(x) for x in row] for row in gram]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("form is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def short_vectors(gram, bound, include_zero: bool = False):
    """Yield (x, Q(x)) for all integer x with x^T gram x <= bound.

    Fincke-Pohst enumeration; exact, deterministic order.
    """
    n = len(gram)
    q = _ldl(gram)
    x = [0] * n
    bound = Fraction(bound)

    def rec(i, rem):
        c = -sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        qi = q[i][i]
        s = isqrt(floor(rem / qi)) + 1
        lo = floor(c) - s
        hi = floor(c) + s + 1
        for xi in range(lo, hi + 1):
            d = xi - c
            t = qi * d * d
            if t > rem:
                continue
            x[i] = xi
            if i == 0:
                yield x, bound - rem + t
            else:
                yield from rec(i - 1, rem - t)
        x[i] = 0

    for v, val in rec(n - 1, bound):
        if not include_zero and not any(v):
            continue
        yield list(v), int(val)


def lattice_short_vectors(basis, G, bound, include_zero=False):
    """Vectors (ambient coordinates) of the lattice spanned by basis with G-norm <= bound."""
    red = lll(basis, G)
    gram = gram_of(red, G)
    n = len(G)
    for c, val in short_vectors(gram, bound, include_zero):
        v = [0] * n
        for ci, b in zip(c, red):
            if ci:
                for j in range(n):
                    v[j] += ci * b[j]
        yield v, val
