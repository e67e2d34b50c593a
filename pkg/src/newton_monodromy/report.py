"""Assemble analysis reports from the module operations.

Nothing here computes geometry; every value comes from one call into the
``newton``, ``nondeg``, ``zeta``, ``jordan`` or ``localmono`` modules.
"""

from __future__ import annotations

from math import gcd

from .jordan import jordan_table
from .localmono import LocalScene, atypical_eigenvalues_local, check_local_hypotheses
from .newton import admissible_faces, atypical_eigenvalues, atypical_faces, build_newton
from .nondeg import Verdict, check_all
from .poly import Polynomial
from .roots import format_root
from .zeta import multiplicity_table, zeta_at_infinity, zeta_torus_at_infinity

SCHEMA_VERSION = 1


def _vertex_lists(faces) -> list:
    return [[list(v) for v in f.vertices] for f in faces]


def scaling_factor(vertices) -> int:
    """Largest ``m`` with every vertex divisible by ``m`` (so the polytope is ``m``
    times a lattice polytope)."""
    return gcd(*(c for v in vertices for c in v))


def analyze(poly: Polynomial, text: str | None = None, trials: int = 64, seed: int = 0,
            skip_nondeg: bool = False) -> tuple[dict, int]:
    """Full analysis of one polynomial.  Returns ``(report, exit_code)``."""
    torus = any(c < 0 for e in poly.terms for c in e)
    N = build_newton(poly, allow_laurent=poly.laurent)
    warnings = []
    report = {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "text": text if text is not None else str(poly),
            "poly": str(poly),
            "n": poly.ambient_dim,
            "laurent": poly.laurent,
            "seed": seed,
            "nondeg_trials": trials,
            "skip_nondeg": skip_nondeg,
        },
        "gamma_infinity": dict(
            N.gamma_inf.to_json(), dim=N.gamma_inf.dim, full_dim=N.full_dim, convenient=N.convenient
        ),
        "atypical_faces": None,
        "admissible_faces": None,
        "A_f": None,
        "nondegeneracy": None,
        "zeta": None,
        "multiplicities": None,
        "jordan": None,
        "warnings": warnings,
    }
    code = 0

    if skip_nondeg:
        warnings.append("non-degeneracy check skipped; results assume f is non-degenerate at infinity")
    else:
        status = check_all(poly, N, trials, seed)
        report["nondegeneracy"] = status.to_json()
        overall = status.overall
        if overall == Verdict.DEGENERATE_CERTIFIED:
            warnings.append("DegenerateCertified: f is degenerate at infinity; the formulas do not apply")
            code = 2
        elif overall == Verdict.LIKELY_DEGENERATE:
            warnings.append("LikelyDegenerate: a face looks degenerate at infinity; results are unreliable")
        elif overall == Verdict.PROBABLY_NONDEGENERATE:
            warnings.append("ProbablyNonDegenerate: some faces of dimension >= 2 passed only a randomized test")

    if not N.full_dim:
        warnings.append(
            f"Γ∞(f) has dimension {N.gamma_inf.dim} < n = {N.n}; face classification and zeta are undefined"
        )
        return report, code

    if torus:
        zeta = zeta_torus_at_infinity(poly)
        report["zeta"] = dict(zeta.to_json(), kind="torus")
        warnings.append("negative exponents: only the torus zeta function is reported")
        return report, code

    A = atypical_eigenvalues(N)
    report["atypical_faces"] = _vertex_lists(atypical_faces(N))
    report["admissible_faces"] = [
        {
            "vertices": [list(v) for v in N.record(f).face.vertices],
            "dim": f.dim,
            "s": N.record(f).s_gamma,
            "m": N.record(f).m_gamma,
            "d": N.record(f).d_gamma,
            "vol": N.record(f).vol_Z,
        }
        for f in admissible_faces(N)
    ]
    report["A_f"] = A.to_json()
    report["zeta"] = dict(zeta_at_infinity(N).to_json(), kind="affine")
    report["multiplicities"] = [
        {"eigenvalue": format_root(lam), "multiplicity": m} for lam, m in multiplicity_table(N).items()
    ]
    report["jordan"] = jordan_table(N).to_json()

    if N.n == 2:
        m = scaling_factor(N.gamma_inf.vertices)
        if m >= 2:
            warnings.append(
                f"Γ∞(f) is {m} times a lattice polygon; the face parts may be {m}-th powers, "
                "so the connectedness argument for generic fibers does not apply as stated"
            )
    return report, code


def analyze_local(scene: LocalScene, trials: int = 64, seed: int = 0) -> dict:
    diags = check_local_hypotheses(scene, trials, seed)
    warnings = []
    for d in diags:
        if not d.convenient:
            warnings.append(f"{d.role} polynomial {d.poly} is not convenient at the origin")
        if d.nondeg.overall < Verdict.PROBABLY_NONDEGENERATE:
            warnings.append(f"{d.role} polynomial {d.poly}: {d.nondeg.overall.label}")
    return {
        "schema_version": SCHEMA_VERSION,
        "n": scene.ambient_dim,
        "A_circ": atypical_eigenvalues_local(scene).to_json(),
        "note": "the atypical eigenvalues at b are contained in this set",
        "polynomials": [d.to_json() for d in diags],
        "warnings": warnings,
    }


# -- text rendering ---------------------------------------------------------

def _face_str(vs) -> str:
    return "conv{" + ", ".join("(" + ",".join(str(c) for c in v) + ")" for v in vs) + "}"


def render_text(report: dict) -> str:
    lines = []
    inp = report["input"]
    g = report["gamma_infinity"]
    lines.append(f"f = {inp['poly']}   (n = {inp['n']})")
    lines.append(
        f"Γ∞(f): dim {g['dim']}, full-dimensional: {'yes' if g['full_dim'] else 'no'}, "
        f"convenient: {'yes' if g['convenient'] else 'no'}"
    )
    lines.append("  vertices: " + ", ".join("(" + ",".join(map(str, v)) + ")" for v in g["vertices"]))
    if report["atypical_faces"] is not None:
        lines.append("atypical faces:")
        lines += [f"  {_face_str(f)}" for f in report["atypical_faces"]] or ["  none"]
        lines.append("admissible faces at infinity:")
        for f in report["admissible_faces"]:
            lines.append(
                f"  {_face_str(f['vertices'])}  dim={f['dim']} s={f['s']} m={f['m']} d={f['d']} vol={f['vol']}"
            )
        lines.append("A_f = {" + ", ".join(report["A_f"]["eigenvalues"]) + "}")
    nd = report["nondegeneracy"]
    if nd is not None:
        lines.append(f"non-degeneracy at infinity: {nd['overall']}")
        for fv in nd["faces"]:
            if fv["verdict"] not in ("NonDegenerateCertified",):
                lines.append(f"  {_face_str(fv['face'])}: {fv['verdict']}")
    if report["zeta"] is not None:
        lines.append(f"zeta at infinity ({report['zeta']['kind']}): {report['zeta']['pretty']}")
    if report["multiplicities"] is not None:
        lines.append("multiplicities of non-atypical eigenvalues:")
        for row in report["multiplicities"]:
            lines.append(f"  exp(2πi·{row['eigenvalue']}): {row['multiplicity']}")
    if report["jordan"] is not None:
        j = report["jordan"]
        n = j["n"]
        lines.append(f"Jordan blocks (sizes {n} and {n - 1}):")
        for row in j["table"]:
            flag = "  [height coincidence]" if row.get("height_coincidence") else ""
            lines.append(
                f"  exp(2πi·{row['eigenvalue']}): size {n}: {row['size_n']}, "
                f"size {n - 1}: {row['size_n_minus_1']}{flag}"
            )
        if not j["table"]:
            lines.append("  none")
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def render_local_text(report: dict) -> str:
    lines = [f"local scene, n = {report['n']}"]
    lines.append("A° = {" + ", ".join(report["A_circ"]["eigenvalues"]) + "}  (" + report["note"] + ")")
    for p in report["polynomials"]:
        extra = f", slice orders {p['slice_orders']}" if p["role"] == "boundary" else ""
        lines.append(
            f"  {p['role']}: {p['poly']}: convenient={'yes' if p['convenient'] else 'no'}, "
            f"{p['nondegeneracy']['overall']}{extra}"
        )
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)
