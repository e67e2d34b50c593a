import itertools
import random
from fractions import Fraction

import pytest

from newton_monodromy.errors import FaceError
from newton_monodromy.localmono import (
    LocalScene,
    atypical_eigenvalues_local,
    check_local_hypotheses,
    compact_faces,
    compact_faces_by_functional,
    gamma_plus,
    gamma_plus_circ,
    restrict_to_divisor,
)
from newton_monodromy.nondeg import Verdict
from newton_monodromy.poly import Polynomial, parse_polynomial


def P2(text):
    return parse_polynomial(text, 2)


def test_gamma_plus_examples():
    G = gamma_plus(P2("x^2 + y^3"))
    assert G.vertices == ((0, 3), (2, 0))
    assert set(G.rays) == {(1, 0), (0, 1)}
    assert gamma_plus(P2("x*y")).vertices == ((1, 1),)
    G = gamma_plus(P2("x^2 + x*y + y^4"))
    assert G.vertices == ((0, 4), (1, 1), (2, 0))
    faces = compact_faces(G)
    assert [F.dim for F in faces].count(0) == 3 and [F.dim for F in faces].count(1) == 2


def test_gamma_plus_rejects_constant_term():
    with pytest.raises(FaceError):
        gamma_plus(P2("1 + x"))


def test_slice_examples():
    S = gamma_plus_circ(gamma_plus(P2("x^2 + y^3")))
    assert S.vertices == ((2, 0),) and S.rays == ((1, 0),)
    assert gamma_plus_circ(gamma_plus(P2("x*y"))) is None
    assert gamma_plus_circ(gamma_plus(P2("x^3 + x*y + y^2"))).vertices == ((3, 0),)


def test_local_atypical_examples():
    assert atypical_eigenvalues_local(LocalScene(2, (), (P2("x1^2 + x2"),))).eigenvalues() == [
        Fraction(0), Fraction(1, 2)]
    assert atypical_eigenvalues_local(LocalScene(2, (), (P2("x*y"),))).eigenvalues() == [Fraction(0)]
    assert atypical_eigenvalues_local(LocalScene(2)).eigenvalues() == [Fraction(0)]
    both = LocalScene(2, (), (P2("x^2 + y"), P2("x^3 + y")))
    assert atypical_eigenvalues_local(both).orders == frozenset({2, 3})


def test_interior_points_do_not_contribute():
    scene = LocalScene(2, (P2("x^5 + y"),), ())
    assert atypical_eigenvalues_local(scene).eigenvalues() == [Fraction(0)]


def test_three_variable_slice_faces_by_hand():
    # boundary poly x^2 + y^3 + z: the slice {v3 = 0} is the planar region
    # conv{(2,0),(0,3)} + R^2_+, with compact faces {(2,0)}, {(0,3)} and the
    # edge; their lattice distances are 2, 3 and 6
    scene = LocalScene(3, (), (parse_polynomial("x^2 + y^3 + z", 3),))
    assert atypical_eigenvalues_local(scene).orders == frozenset({2, 3, 6})


def test_hypothesis_diagnostics():
    (d,) = check_local_hypotheses(LocalScene(2, (P2("x^2 + y^3"),)))
    assert d.convenient and d.nondeg.overall == Verdict.NONDEGENERATE_CERTIFIED
    (d,) = check_local_hypotheses(LocalScene(2, (P2("x^2*y + y^3"),)))
    assert not d.convenient
    (d,) = check_local_hypotheses(LocalScene(2, (P2("x^2 + 2*x*y + y^2 + y^3"),)))
    assert d.nondeg.overall == Verdict.DEGENERATE_CERTIFIED


def test_scene_validation():
    with pytest.raises(ValueError):
        LocalScene(2, (P2("x + 1"),))
    with pytest.raises(ValueError):
        LocalScene(3, (P2("x"),))
    scene = LocalScene.from_json({"n": 2, "interior": ["x^2 + y^3"], "boundary": ["x1^2 + x2"]})
    assert len(scene.interior_polys) == 1 and len(scene.boundary_polys) == 1


def random_local_poly(rng, n):
    pts = {tuple(rng.randint(0, 4) for _ in range(n)) for _ in range(rng.randint(1, 6))}
    pts.discard((0,) * n)
    if not pts:
        pts = {(1,) + (0,) * (n - 1)}
    return Polynomial(n, {p: 1 for p in pts})


@pytest.mark.parametrize("n", [2, 3])
def test_slice_equals_polyhedron_of_restriction(n):
    rng = random.Random(600 + n)
    for _ in range(30):
        f = random_local_poly(rng, n)
        S = gamma_plus_circ(gamma_plus(f))
        g = restrict_to_divisor(f)
        if g is None:
            assert S is None
            continue
        R = gamma_plus(g)
        assert [v[:-1] for v in S.vertices] == list(R.vertices)
        assert sorted(r[:-1] for r in S.rays) == sorted(R.rays)


@pytest.mark.parametrize("n", [2, 3])
def test_compact_faces_two_criteria_agree(n):
    rng = random.Random(700 + n)
    for _ in range(30):
        G = gamma_plus(random_local_poly(rng, n))
        assert set(compact_faces(G)) == set(compact_faces_by_functional(G))


def test_union_semantics_is_monotone():
    rng = random.Random(8)
    polys = [random_local_poly(rng, 2) for _ in range(6)]
    for k in range(1, len(polys)):
        for combo in itertools.combinations(polys, k):
            small = atypical_eigenvalues_local(LocalScene(2, (), combo[:-1]))
            big = atypical_eigenvalues_local(LocalScene(2, (), combo))
            assert Fraction(0) in big
            assert set(small.eigenvalues()) <= set(big.eigenvalues())
