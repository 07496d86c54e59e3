import itertools

import sympy
from hypothesis import given, settings, strategies as st

from quadtorsion import lattice

small = st.integers(-20, 20)
mat = st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=5)


def span_contains(rows, v):
    return lattice.solve_integer(rows, v) is not None


def test_xgcd():
    for a in range(-30, 31):
        for b in range(-30, 31):
            g, x, y = lattice.xgcd(a, b)
            assert g == sympy.gcd(a, b) and g == x * a + y * b


@settings(max_examples=200)
@given(mat)
def test_hnf_same_lattice_and_canonical(rows):
    H = lattice.hnf(rows)
    for r in rows:
        assert span_contains(H, r) or not any(r)
    for h in H:
        assert span_contains(rows, h)
    # invariance under unimodular row operations
    shuffled = [list(r) for r in rows[::-1]]
    if len(shuffled) > 1:
        shuffled[0] = [a + 3 * b for a, b in zip(shuffled[0], shuffled[1])]
    assert lattice.hnf(shuffled) == H


@settings(max_examples=200)
@given(mat)
def test_kernel_against_sympy_rank(rows):
    K = lattice.kernel(rows)
    for k in K:
        assert all(sum(a * b for a, b in zip(r, k)) == 0 for r in rows)
    rank = sympy.Matrix(rows).rank()
    assert len(K) == 4 - rank


@settings(max_examples=200)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=4, max_size=4))
def test_det_against_sympy(M):
    assert lattice.det(M) == sympy.Matrix(M).det()


def test_solve_rational():
    from fractions import Fraction
    assert lattice.solve_rational([[2, 0], [0, 3]], [1, 1]) == [Fraction(1, 2), Fraction(1, 3)]
    assert lattice.solve_integer([[2, 0], [0, 3]], [1, 1]) is None


def test_lll_and_short_vectors_against_enumeration():
    G = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    basis = [[1, 7, 3], [0, 5, 11], [0, 0, 13]]
    red = lattice.lll(basis, G)
    assert abs(lattice.det(red)) == abs(lattice.det(basis))
    bound = 30
    found = {tuple(v) for v, _ in lattice.lattice_short_vectors(basis, G, bound)}
    # brute force: coefficient box large enough for these vectors
    brute = set()
    for c in itertools.product(range(-12, 13), repeat=3):
        v = tuple(sum(c[i] * basis[i][j] for i in range(3)) for j in range(3))
        if 0 < sum(x * x for x in v) <= bound:
            brute.add(v)
    assert found == brute


def test_short_vectors_positive_form():
    gram = [[2, 1], [1, 2]]
    vs = {tuple(x) for x, q in lattice.short_vectors(gram, 2)}
    assert vs == {(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)}
