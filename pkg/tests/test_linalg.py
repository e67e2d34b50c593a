from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from newton_monodromy.latgeo.linalg import (
    column_echelon,
    det,
    hnf,
    integer_kernel,
    integer_solution,
    primitive,
    rank,
    saturated_basis,
    solve_coordinates,
)
from oracles import det as oracle_det
from oracles import minors_gcd, rank as oracle_rank


def matrices(rows=(1, 4), cols=(1, 5), lo=-6, hi=6):
    return st.integers(*cols).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=rows[0], max_size=rows[1])
    )


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def test_primitive_divides_by_content_and_keeps_direction():
    assert primitive((4, -6, 0)) == (2, -3, 0)
    assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)


def test_hnf_known_example():
    assert hnf([(2, 4), (3, 5)]) == [(1, 1), (0, 2)]


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_column_echelon_is_unimodular_transform(a):
    n = len(a[0])
    h, u, piv = column_echelon(a, n)
    assert matmul(a, u) == h
    assert abs(oracle_det(u)) == 1
    assert len(piv) == oracle_rank(a)
    for j in range(len(piv), n):
        assert all(row[j] == 0 for row in h)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_integer_kernel_is_saturated_kernel(a):
    n = len(a[0])
    ker = integer_kernel(a, n)
    assert len(ker) == n - oracle_rank(a)
    for v in ker:
        assert all(sum(r[i] * v[i] for i in range(n)) == 0 for r in a)
    if ker:
        # a saturated sublattice has coprime maximal minors
        assert minors_gcd([list(v) for v in ker]) == 1


@settings(max_examples=150, deadline=None)
@given(matrices(rows=(1, 4)))
def test_hnf_shape_and_lattice(a):
    h = hnf(a)
    assert len(h) == oracle_rank(a)
    pivots = []
    for row in h:
        c = next(i for i, x in enumerate(row) if x != 0)
        assert row[c] > 0
        pivots.append(c)
    assert pivots == sorted(set(pivots))
    for i, c in enumerate(pivots):
        for j in range(i):
            assert 0 <= h[j][c] < h[i][c]
    # same lattice: each original row is an integer combination of the HNF
    # rows; with independent rows the gcd of maximal minors is also kept
    for row in a:
        if any(row):
            coords = solve_coordinates(h, row)
            assert coords is not None and all(Fraction(c).denominator == 1 for c in coords)
    if h and len(a) == len(h):
        assert minors_gcd([list(r) for r in a]) == minors_gcd([list(r) for r in h])


@settings(max_examples=100, deadline=None)
@given(matrices(rows=(1, 3)), st.data())
def test_integer_solution_solves_when_rhs_is_in_image(a, data):
    n = len(a[0])
    x = data.draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    rhs = [sum(r[i] * x[i] for i in range(n)) for r in a]
    y = integer_solution(a, rhs, n)
    assert y is not None
    assert [sum(r[i] * y[i] for i in range(n)) for r in a] == rhs


def test_integer_solution_detects_non_integral_system():
    assert integer_solution([(2, 4)], [3], 2) is None


@settings(max_examples=100, deadline=None)
@given(matrices(rows=(1, 3), cols=(2, 4)))
def test_saturated_basis_spans_rational_span(a):
    n = len(a[0])
    basis = saturated_basis(a, n)
    assert len(basis) == oracle_rank(a)
    if basis:
        assert minors_gcd([list(b) for b in basis]) == 1
        for r in a:
            assert solve_coordinates(basis, r) is not None


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda k: st.lists(st.lists(st.integers(-5, 5), min_size=k, max_size=k),
                                                   min_size=k, max_size=k)))
def test_det_matches_oracle(m):
    assert det(m) == oracle_det(m)
    assert rank(m) == oracle_rank(m)
