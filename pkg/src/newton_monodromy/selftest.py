"""Built-in fixture suite run by ``newton-monodromy selftest``."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .jordan import interior_edges, interior_vertices, jordan_table, n_lambda
from .latgeo import convex_hull, lattice_distance, lattice_points, normalized_volume
from .localmono import LocalScene, atypical_eigenvalues_local
from .newton import atypical_eigenvalues, build_newton, is_atypical_by_facets
from .nondeg import Verdict, check_all
from .poly import Polynomial, parse_polynomial
from .zeta import FactoredZeta, multiplicity, multiplicity_factors, zeta_at_infinity


@dataclass(frozen=True)
class Fixture:
    name: str
    tags: tuple[str, ...]
    run: Callable[[], bool]


def _support(points, n) -> Polynomial:
    return Polynomial(n, {tuple(p): 1 for p in points})


def _atypical_example_one() -> bool:
    N = build_newton(_support([(2, 0, 0), (2, 2, 0), (2, 2, 3)], 3))
    seg = N.record(N.face((0, 0, 0), (2, 2, 0)))
    tri = N.record(N.face((0, 0, 0), (2, 0, 0), (2, 2, 0)))
    return seg.atypical and not tri.atypical


def _atypical_example_two() -> bool:
    N = build_newton(_support([(2, 0, 0), (0, 2, 0), (1, 1, 2)], 3))
    return bool(N.record(N.face((0, 0, 0), (2, 0, 0))).atypical)


def _atypical_criteria_agree() -> bool:
    for pts, n in [
        ([(2, 0, 0), (2, 2, 0), (2, 2, 3)], 3),
        ([(2, 0, 0), (0, 2, 0), (1, 1, 2)], 3),
        ([(1, 3), (3, 0), (3, 2)], 2),
        ([(2, 0, 0), (0, 2, 0), (1, 1, 1)], 3),
    ]:
        N = build_newton(_support(pts, n))
        for r in N.records:
            if r.face.contains_origin and r.atypical != is_atypical_by_facets(N, r.face):
                return False
    return True


def _a_f_quadrilateral() -> bool:
    N = build_newton(_support([(1, 3), (3, 0), (3, 2)], 2))
    return atypical_eigenvalues(N).eigenvalues() == [Fraction(0)]


def _non_admissible_contribution() -> bool:
    N = build_newton(_support([(2, 0, 0), (0, 2, 0), (1, 1, 1)], 3))
    r = N.record(N.face((2, 0, 0)))
    return (
        not r.admissible
        and r.m_gamma == 0
        and r.d_gamma == 2
        and zeta_at_infinity(N) == FactoredZeta({2: 2})
        and 2 not in multiplicity_factors(N).factors
    )


def _zeta_cusp() -> bool:
    N = build_newton(parse_polynomial("x^2 + y^3", 2))
    return (
        zeta_at_infinity(N) == FactoredZeta({2: 1, 3: 1, 6: -1})
        and multiplicity(N, Fraction(1, 6)) == 1
        and multiplicity(N, Fraction(5, 6)) == 1
        and multiplicity(N, Fraction(1, 2)) == 0
        and multiplicity(N, Fraction(1, 3)) == 0
    )


def _zeta_quadrilateral() -> bool:
    N = build_newton(_support([(1, 3), (3, 0), (3, 2)], 2))
    return zeta_at_infinity(N) == FactoredZeta({3: -1, 7: -1})


def _jordan_cusp() -> bool:
    T = jordan_table(build_newton(parse_polynomial("x^2 + y^3", 2)))
    return all(
        (T.row(Fraction(k, 6)).size_n, T.row(Fraction(k, 6)).size_n_minus_1) == (0, 1) for k in (1, 5)
    )


def _jordan_interior_vertex() -> bool:
    N = build_newton(parse_polynomial("x^5 + y^5 + x^3*y^3", 2))
    T = jordan_table(N)
    return interior_vertices(N) == [((3, 3), 3)] and T.row(Fraction(1, 3)).size_n == 1


def _n_lambda_cusp() -> bool:
    (edge,) = interior_edges(build_newton(parse_polynomial("x^2 + y^3", 2)))
    return [n_lambda(edge, Fraction(k, 6)) for k in (1, 3, 5)] == [1, 0, 1]


def _lattice_examples() -> bool:
    return (
        lattice_distance([(2, 0), (0, 3)]) == 6
        and lattice_distance([(1, 3), (3, 2)]) == 7
        and normalized_volume(convex_hull([(3, 0), (3, 2)]).improper_face) == 2
        and lattice_points(convex_hull([(0, 0), (2, 0), (0, 3)]), True) == [(1, 1)]
    )


def _nondeg_verdicts() -> bool:
    def overall(text, n):
        f = parse_polynomial(text, n)
        return check_all(f, build_newton(f)).overall

    return (
        overall("x^2 + y^3", 2) == Verdict.NONDEGENERATE_CERTIFIED
        and overall("x^2 + 2*x*y + y^2", 2) == Verdict.DEGENERATE_CERTIFIED
    )


def _local_atypical() -> bool:
    one = LocalScene(2, (), (parse_polynomial("x1^2 + x2", 2),))
    empty = LocalScene(2, (), (parse_polynomial("x1*x2", 2),))
    return (
        atypical_eigenvalues_local(one).eigenvalues() == [Fraction(0), Fraction(1, 2)]
        and atypical_eigenvalues_local(empty).eigenvalues() == [Fraction(0)]
    )


FIXTURES = [
    Fixture("atypical_segment_example", ("atypical", "paper"), _atypical_example_one),
    Fixture("atypical_second_example", ("atypical", "paper"), _atypical_example_two),
    Fixture("atypical_criteria_agree", ("atypical", "oracle"), _atypical_criteria_agree),
    Fixture("a_f_quadrilateral", ("a_f", "paper"), _a_f_quadrilateral),
    Fixture("non_admissible_contribution", ("zeta", "paper"), _non_admissible_contribution),
    Fixture("zeta_cusp", ("zeta", "oracle"), _zeta_cusp),
    Fixture("zeta_quadrilateral", ("zeta", "oracle"), _zeta_quadrilateral),
    Fixture("jordan_cusp", ("jordan", "oracle"), _jordan_cusp),
    Fixture("jordan_interior_vertex", ("jordan", "oracle"), _jordan_interior_vertex),
    Fixture("n_lambda_cusp", ("jordan", "oracle"), _n_lambda_cusp),
    Fixture("lattice_examples", ("lattice", "oracle"), _lattice_examples),
    Fixture("nondeg_verdicts", ("nondeg", "oracle"), _nondeg_verdicts),
    Fixture("local_atypical", ("local", "paper"), _local_atypical),
]

# deliberately wrong expectation, used as a negative control
INJECTED_FAILURE = Fixture("injected_failure", ("injected",), lambda: not _zeta_cusp())


def select(filter_text: str | None = None, inject_failure: bool = False) -> list[Fixture]:
    fixtures = FIXTURES
    if filter_text:
        key = filter_text.lower()
        fixtures = [f for f in fixtures if key in f.name or key in f.tags]
    return fixtures + ([INJECTED_FAILURE] if inject_failure else [])


def run(fixtures: list[Fixture]) -> list[tuple[Fixture, bool, float, str]]:
    results = []
    for fx in fixtures:
        start = time.perf_counter()
        try:
            ok, err = bool(fx.run()), ""
        except Exception as exc:  # a crashing fixture counts as a failure
            ok, err = False, f"{type(exc).__name__}: {exc}"
        results.append((fx, ok, time.perf_counter() - start, err))
    return results
