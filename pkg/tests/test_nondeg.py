from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newton_monodromy.errors import FaceError
from newton_monodromy.newton import build_newton
from newton_monodromy.nondeg import (
    PRIMES,
    Verdict,
    check_all,
    check_face,
    gcd_q,
    reduced_face_polynomial,
)
from newton_monodromy.poly import Polynomial, parse_polynomial
from oracles import poly_mul


def overall(text, n, **kw):
    f = parse_polynomial(text, n)
    return check_all(f, build_newton(f), **kw)


def test_cusp_is_certified():
    assert overall("x^2 + y^3", 2).overall == Verdict.NONDEGENERATE_CERTIFIED


def test_squared_edge_is_certified_degenerate():
    status = overall("x^2 + 2*x*y + y^2", 2)
    assert status.overall == Verdict.DEGENERATE_CERTIFIED
    (bad,) = [fv for fv in status.faces if fv.verdict == Verdict.DEGENERATE_CERTIFIED]
    assert bad.certificate["gcd_with_derivative"] == ["1", "1"]


def test_non_reduced_two_face_is_likely_degenerate():
    # the face part on the top 2-face is (x + y + z)^2; its edges are already
    # certified degenerate, the 2-face itself only gets a randomized witness
    status = overall("x^2 + 2*x*y + y^2 + 2*x*z + 2*y*z + z^2 + 1", 3)
    assert status.overall == Verdict.DEGENERATE_CERTIFIED
    (top,) = [fv for fv in status.faces if fv.face.dim == 2]
    assert top.verdict == Verdict.LIKELY_DEGENERATE
    cert = top.certificate
    assert cert["prime"] in PRIMES and len(cert["fiber_gcd_mod_p"]) > 1


def test_generic_three_variable_polynomials_pass_randomized_test():
    for text in ("x^2 + y^2 + z^2 + 1", "x^2 + y^2 + x*y*z"):
        status = overall(text, 3)
        assert status.overall == Verdict.PROBABLY_NONDEGENERATE
        assert all(fv.trials in (None, 64) for fv in status.faces)


def test_verdicts_are_deterministic_for_a_seed():
    a = overall("x^2 + 2*x*y + y^2 + 2*x*z + 2*y*z + z^2 + 1", 3, seed=5).to_json()
    b = overall("x^2 + 2*x*y + y^2 + 2*x*z + 2*y*z + z^2 + 1", 3, seed=5).to_json()
    assert a == b


def test_check_face_rejects_faces_through_origin():
    f = parse_polynomial("x^2 + y^3", 2)
    N = build_newton(f)
    with pytest.raises(FaceError):
        check_face(f, N.face((0, 0), (2, 0)))


def test_reduced_face_polynomial_uses_lattice_coordinates():
    f = parse_polynomial("x^4 + 3*x^2*y^2 + y^4 + 1", 2)
    N = build_newton(f)
    g = reduced_face_polynomial(f, N.face((0, 4), (4, 0)))
    # the edge has lattice length 4 along (1,-1): 1 + 3 s^2 + s^4
    assert sorted(g.values()) == [1, 1, 3]
    assert sorted(e[0] for e in g) == [0, 2, 4]


def test_gcd_q():
    assert gcd_q([1, 2, 1], [2, 2]) == [1, 1]
    assert gcd_q([1, 0, 1], [0, 2]) == [1]


def expand_binary_form(roots, mults):
    """Coefficients (in x^k y^(d-k)) of prod (x - r*y)^m as a 2-variable Polynomial."""
    coeffs = [Fraction(1)]
    for r, m in zip(roots, mults):
        for _ in range(m):
            coeffs = poly_mul(coeffs, [Fraction(-r), Fraction(1)])
    d = len(coeffs) - 1
    return Polynomial(2, {(k, d - k): c for k, c in enumerate(coeffs)})


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 9), min_size=1, max_size=4, unique=True),
       st.lists(st.integers(1, 3), min_size=4, max_size=4))
def test_binary_forms_degenerate_iff_repeated_factor(roots, mults):
    mults = mults[: len(roots)]
    f = expand_binary_form(roots, mults)
    if len(f.terms) < 2:
        return
    status = check_all(f, build_newton(f))
    edge = [fv for fv in status.faces if fv.face.dim == 1]
    expected = Verdict.DEGENERATE_CERTIFIED if max(mults) > 1 else Verdict.NONDEGENERATE_CERTIFIED
    # a binary form is the part of f on its unique edge at infinity
    assert [fv.verdict for fv in edge] == [expected]


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=-20, max_value=20, max_denominator=7).filter(lambda c: c != 0))
def test_degenerate_verdict_is_stable_under_scaling(c):
    f = parse_polynomial("x^2 + 2*x*y + y^2 + x + y", 2).scaled(c)
    assert check_all(f, build_newton(f)).overall == Verdict.DEGENERATE_CERTIFIED


def test_two_variable_checks_are_always_exact():
    for text in ("x^2 + y^3", "x^3 + x*y + y^4 + 1", "x^2*y^2 + x + y", "x^4 + 3*x^2*y^2 + y^4"):
        f = parse_polynomial(text, 2)
        for fv in check_all(f, build_newton(f)).faces:
            assert fv.verdict in (Verdict.NONDEGENERATE_CERTIFIED, Verdict.DEGENERATE_CERTIFIED)
