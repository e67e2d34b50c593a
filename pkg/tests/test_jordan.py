import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newton_monodromy.errors import NotFullDimensionalError
from newton_monodromy.jordan import cone_infinity, interior_edges, interior_vertices, jordan_table, n_lambda
from newton_monodromy.newton import build_newton
from newton_monodromy.poly import Polynomial, parse_polynomial
from newton_monodromy.zeta import multiplicity
from oracles import edge_distance, edge_pyramid_heights, random_support


def newton_of(points, n):
    return build_newton(Polynomial(n, {tuple(p): 1 for p in points}))


def test_cone_generators():
    assert set(cone_infinity(newton_of([(2, 0), (0, 3)], 2)).generators) == {(1, 0), (0, 1)}
    assert set(cone_infinity(newton_of([(1, 3), (3, 0), (3, 2)], 2)).generators) == {(1, 0), (1, 3)}
    gens = cone_infinity(newton_of([(2, 0, 0), (2, 2, 0), (2, 2, 3)], 3)).generators
    assert set(gens) == {(1, 0, 0), (1, 1, 0), (2, 2, 3)}


def test_interior_vertices():
    assert interior_vertices(newton_of([(5, 0), (0, 5), (3, 3)], 2)) == [((3, 3), 3)]
    assert interior_vertices(newton_of([(2, 0), (0, 3)], 2)) == []
    assert interior_vertices(newton_of([(2, 0, 0), (2, 2, 0), (2, 2, 3)], 3)) == []


def test_interior_edges():
    (edge,) = interior_edges(newton_of([(2, 0), (0, 3)], 2))
    assert edge.edge.vertices == ((0, 3), (2, 0)) and edge.e == 6
    edges = interior_edges(newton_of([(5, 0), (0, 5), (3, 3)], 2))
    assert sorted(e.edge.vertices for e in edges) == [((0, 5), (3, 3)), ((3, 3), (5, 0))]
    assert [e.e for e in edges] == [15, 15]
    assert interior_edges(newton_of([(2, 0, 0), (2, 2, 0), (2, 2, 3)], 3)) == []


def test_n_lambda_on_cusp():
    (edge,) = interior_edges(newton_of([(2, 0), (0, 3)], 2))
    assert n_lambda(edge, Fraction(1, 6)) == 1
    assert n_lambda(edge, Fraction(5, 6)) == 1
    assert n_lambda(edge, Fraction(1, 2)) == 0


def test_n_lambda_errors():
    (edge,) = interior_edges(newton_of([(2, 0), (0, 3)], 2))
    with pytest.raises(ValueError):
        n_lambda(edge, 0)
    with pytest.raises(ValueError):
        n_lambda(edge, Fraction(1, 5))


def test_cusp_table():
    T = jordan_table(build_newton(parse_polynomial("x^2 + y^3", 2)))
    rows = {r.eigenvalue: (r.size_n, r.size_n_minus_1) for r in T.rows}
    assert rows == {
        Fraction(1, 2): (0, 0),
        Fraction(1, 3): (0, 0),
        Fraction(2, 3): (0, 0),
        Fraction(1, 6): (0, 1),
        Fraction(5, 6): (0, 1),
    }
    assert T.row(Fraction(1, 2)).height_coincidence
    assert [r.eigenvalue for r in T.rows] == sorted(rows, key=lambda x: (x.denominator, x.numerator))


def test_interior_vertex_gives_maximal_blocks():
    N = build_newton(parse_polynomial("x^5 + y^5 + x^3*y^3", 2))
    T = jordan_table(N)
    for lam in (Fraction(1, 3), Fraction(2, 3)):
        assert T.row(lam).size_n == 1
        assert 2 * T.row(lam).size_n <= multiplicity(N, lam)


def test_atypical_eigenvalues_are_excluded():
    N = newton_of([(2, 0, 0), (0, 2, 0), (1, 1, 1)], 3)
    T = jordan_table(N)
    assert all(r.eigenvalue not in T.excluded for r in T.rows)
    assert Fraction(1, 2) in T.excluded


def test_not_full_dimensional():
    with pytest.raises(NotFullDimensionalError):
        jordan_table(build_newton(parse_polynomial("x*y", 2)))


def test_json_rows():
    T = jordan_table(build_newton(parse_polynomial("x^2 + y^3", 2)))
    data = T.to_json()
    assert data["table"][-1] == {"eigenvalue": "5/6", "size_n": 0, "size_n_minus_1": 1}
    assert data["excluded"]["eigenvalues"] == ["0/1"]


def brute_n_lambda(p, q, lam):
    e = edge_distance(p, q)
    k = int(lam * e) % e or e
    heights = edge_pyramid_heights(p, q, e)
    return heights.count(k) + heights.count(e - k)


@pytest.mark.parametrize("n", [2, 3])
def test_n_lambda_matches_barycentric_oracle(n):
    rng = random.Random(400 + n)
    seen = 0
    for _ in range(40):
        N = newton_of(random_support(rng, n), n)
        for edge in interior_edges(N):
            p, q = edge.edge.vertices
            assert edge.e == edge_distance(p, q)
            for k in range(1, edge.e):
                lam = Fraction(k, edge.e)
                assert n_lambda(edge, lam) == brute_n_lambda(p, q, lam)
                seen += 1
    assert seen > 0


@pytest.mark.parametrize("n", [2, 3])
def test_dimension_bound_and_symmetry(n):
    rng = random.Random(500 + n)
    for _ in range(30):
        N = newton_of(random_support(rng, n), n)
        T = jordan_table(N)
        verts = {q for q, _ in T.interior_vertices}
        for r in T.rows:
            assert n * r.size_n + (n - 1) * r.size_n_minus_1 <= multiplicity(N, r.eigenvalue)
            assert r.size_n <= len(verts)
            conj = T.row(1 - r.eigenvalue)
            assert (conj.size_n, conj.size_n_minus_1) == (r.size_n, r.size_n_minus_1)
        # faces in the open cone are never inside an atypical face
        for ie in T.interior_edges:
            assert N.record(ie.edge).admissible
        for q in verts:
            assert N.record(N.face(q)).admissible


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 7), st.integers(2, 7))
def test_semisimple_brieskorn_pham_in_two_variables(a, b):
    # x^a + y^b is weighted homogeneous, so its monodromy at infinity is of
    # finite order: no blocks of size 2, and every eigenvalue is a size-1 block
    N = build_newton(parse_polynomial(f"x^{a} + y^{b}", 2))
    T = jordan_table(N)
    for r in T.rows:
        assert r.size_n == 0
        assert r.size_n_minus_1 == multiplicity(N, r.eigenvalue)
