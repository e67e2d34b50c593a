"""Face-by-face check of non-degeneracy at infinity.

For a face ``gamma`` not through the origin, the face part ``f_gamma`` is
rewritten in monomial coordinates adapted to the lattice of ``gamma``:
``f_gamma = x^{v0} * g(y_1, ..., y_k)`` with ``k = dim gamma``.  The
hypersurface ``{f_gamma = 0}`` in the torus is smooth and reduced iff
``{g = 0}`` is, in ``(C*)^k``.

* ``k = 0``: a monomial, never zero on the torus.
* ``k = 1``: ``g`` is univariate with ``g(0) != 0``; smooth and reduced iff
  ``g`` is squarefree.  Decided exactly with a rational gcd.
* ``k >= 2``: randomized search over large prime fields.  Each trial fixes
  all but one coordinate at random and looks for a common root of ``g`` and
  its partial derivatives on that fiber.  This reliably detects non-reduced
  components; isolated singular points are generally missed, which is why a
  clean run only earns ``PROBABLY_NONDEGENERATE``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import FaceError
from .latgeo import Face
from .latgeo.linalg import solve_coordinates, sub
from .poly import Polynomial, face_part

DEFAULT_TRIALS = 64
PRIME_COUNT = 16


class Verdict(enum.IntEnum):
    # ordered from weakest to strongest
    DEGENERATE_CERTIFIED = 0
    LIKELY_DEGENERATE = 1
    PROBABLY_NONDEGENERATE = 2
    NONDEGENERATE_CERTIFIED = 3

    @property
    def label(self) -> str:
        return {
            0: "DegenerateCertified",
            1: "LikelyDegenerate",
            2: "ProbablyNonDegenerate",
            3: "NonDegenerateCertified",
        }[int(self)]


@dataclass
class FaceVerdict:
    face: Face
    verdict: Verdict
    trials: Optional[int] = None
    certificate: Optional[dict] = None

    def to_json(self) -> dict:
        out = {"face": [list(v) for v in self.face.vertices], "dim": self.face.dim,
               "verdict": self.verdict.label}
        if self.trials is not None:
            out["trials"] = self.trials
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


@dataclass
class NondegStatus:
    faces: list[FaceVerdict] = field(default_factory=list)

    @property
    def overall(self) -> Verdict:
        if not self.faces:
            return Verdict.NONDEGENERATE_CERTIFIED
        return min(fv.verdict for fv in self.faces)

    def to_json(self) -> dict:
        return {"overall": self.overall.label, "faces": [fv.to_json() for fv in self.faces]}


# -- univariate arithmetic, coefficient lists low -> high -------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _deriv(a):
    return [i * a[i] for i in range(1, len(a))]


def _rem_q(a, b):
    a = list(a)
    while len(a) >= len(b):
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        _trim(a)
        if not a:
            break
    return a


def gcd_q(a, b):
    """Monic gcd over Q."""
    a, b = _trim([Fraction(x) for x in a]), _trim([Fraction(x) for x in b])
    while b:
        a, b = b, _rem_q(a, b)
    return [c / a[-1] for c in a] if a else []


def _rem_p(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        q = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - q * c) % p
        _trim(a)
        if not a:
            break
    return a


def gcd_p(a, b, p):
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        a, b = b, _rem_p(a, b, p)
    return a


# -- primes near 2^31 ------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes_below(bound: int, count: int) -> tuple[int, ...]:
    out = []
    n = bound - 1
    while len(out) < count:
        if _is_prime(n):
            out.append(n)
        n -= 1
    return tuple(out)


PRIMES = _primes_below(2**31, PRIME_COUNT)


# -- face reduction ---------------------------------------------------------

def reduced_face_polynomial(poly: Polynomial, gamma: Face) -> dict[tuple, Fraction]:
    """The Laurent polynomial ``g`` in lattice coordinates of ``gamma``,
    shifted to have nonnegative exponents with each minimum equal to 0."""
    fg = face_part(poly, gamma)
    basis = gamma.span_basis
    v0 = gamma.vertices[0]
    g = {}
    for e, c in fg.terms.items():
        coords = solve_coordinates(basis, sub(e, v0))
        g[tuple(int(x) for x in coords)] = c
    k = len(basis)
    mins = [min(e[i] for e in g) for i in range(k)]
    return {tuple(e[i] - mins[i] for i in range(k)): c for e, c in g.items()}


def _fiber_gcd(g: dict, free: int, point: dict, p: int) -> Optional[list]:
    """gcd over F_p of g and all its partials restricted to the fiber where
    every variable but ``free`` is fixed by ``point``.  None if g vanishes
    identically on the fiber or a coefficient is not p-integral."""
    k = len(next(iter(g)))
    deg = max(e[free] for e in g)
    G = [0] * (deg + 1)
    partials = {i: [0] * (deg + 1) for i in range(k) if i != free}
    for e, c in g.items():
        if c.denominator % p == 0:
            return None
        cp = c.numerator * pow(c.denominator, p - 2, p) % p
        mono = cp
        for i in range(k):
            if i != free:
                mono = mono * pow(point[i], e[i], p) % p
        G[e[free]] = (G[e[free]] + mono) % p
        for i in partials:
            if e[i]:
                # d/dy_i of y_i^{e_i} at point: e_i * y_i^{e_i - 1}
                val = mono * e[i] * pow(point[i], p - 2, p) % p
                partials[i][e[free]] = (partials[i][e[free]] + val) % p
    if not _trim(list(G)):
        return None
    h = gcd_p(G, _deriv(G), p)
    for part in partials.values():
        if not h:
            break
        h = gcd_p(h, part, p) if _trim(list(part)) else h
    if not h:
        return None
    # strip roots at s = 0, which are outside the torus
    while len(h) > 1 and h[0] == 0:
        h = h[1:]
    return h


def check_face(
    poly: Polynomial,
    gamma: Face,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> FaceVerdict:
    """Non-degeneracy verdict for one face not containing the origin."""
    if gamma.contains_origin:
        raise FaceError("non-degeneracy is checked on faces not containing the origin")
    if not gamma.bounded:
        raise FaceError("non-degeneracy is checked on bounded faces")
    k = gamma.dim
    if k == 0:
        return FaceVerdict(gamma, Verdict.NONDEGENERATE_CERTIFIED)

    g = reduced_face_polynomial(poly, gamma)
    if k == 1:
        coeffs = [Fraction(0)] * (max(e[0] for e in g) + 1)
        for e, c in g.items():
            coeffs[e[0]] = c
        h = gcd_q(coeffs, _deriv(coeffs))
        if len(h) <= 1:
            return FaceVerdict(gamma, Verdict.NONDEGENERATE_CERTIFIED)
        return FaceVerdict(
            gamma,
            Verdict.DEGENERATE_CERTIFIED,
            certificate={
                "face_polynomial": [str(c) for c in coeffs],
                "gcd_with_derivative": [str(c) for c in h],
            },
        )

    rng = random.Random(f"{seed}|{gamma.vertices}")
    for t in range(trials):
        p = rng.choice(PRIMES)
        free = rng.randrange(k)
        point = {i: rng.randrange(1, p) for i in range(k) if i != free}
        h = _fiber_gcd(g, free, point, p)
        if h is not None and len(h) > 1:
            return FaceVerdict(
                gamma,
                Verdict.LIKELY_DEGENERATE,
                trials=t + 1,
                certificate={
                    "seed": seed,
                    "trial": t,
                    "prime": p,
                    "free_coordinate": free,
                    "point": {str(i): v for i, v in sorted(point.items())},
                    "fiber_gcd_mod_p": h,
                },
            )
    return FaceVerdict(gamma, Verdict.PROBABLY_NONDEGENERATE, trials=trials)


def check_all(poly: Polynomial, N, trials: int = DEFAULT_TRIALS, seed: int = 0) -> NondegStatus:
    """Verdicts for every face at infinity of ``N`` (a NewtonAtInfinity)."""
    return NondegStatus([check_face(poly, r.face, trials, seed) for r in N.faces_at_infinity()])
