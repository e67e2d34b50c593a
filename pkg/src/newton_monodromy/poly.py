"""Sparse multivariate (Laurent) polynomials with exact rational coefficients."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .errors import FaceError, ParseError
from .latgeo import Face

ALIASES = {"x": 1, "y": 2, "z": 3}

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x\d+|[xyz])|(?P<op>[-+*^/]))")


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Immutable map from exponent tuples to nonzero Fractions."""

    ambient_dim: int
    terms: Mapping[tuple, Fraction]
    laurent: bool = False

    def __post_init__(self):
        clean = {}
        for exp, c in self.terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.ambient_dim:
                raise ValueError(f"exponent {exp} does not have length {self.ambient_dim}")
            if not self.laurent and any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp} without the Laurent flag")
            c = Fraction(c)
            if c != 0:
                clean[exp] = c
        object.__setattr__(self, "terms", MappingProxyType(clean))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.ambient_dim, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return format_polynomial(self)

    def scaled(self, c) -> "Polynomial":
        return Polynomial(self.ambient_dim, {e: a * c for e, a in self.terms.items()}, self.laurent)


def support(poly: Polynomial) -> set[tuple[int, ...]]:
    return set(poly.terms)


def _var_index(name: str, n: int, pos: int) -> int:
    idx = ALIASES[name] if name in ALIASES else int(name[1:])
    if idx < 1 or idx > n:
        raise ParseError(f"variable {name!r} is out of range for n = {n}", pos)
    return idx - 1


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_polynomial(text: str, ambient_dim: int, laurent: bool = False) -> Polynomial:
    """Parse ``text`` into a canonical Polynomial in ``ambient_dim`` variables.

    Variables are ``x1..xn``; ``x, y, z`` alias ``x1, x2, x3``.  Terms are
    products of an optional leading rational coefficient and powers of
    variables, e.g. ``-3/2*x1^2*x3 + y^-1`` (the latter needs ``laurent``).
    """
    if ambient_dim < 1:
        raise ValueError("ambient dimension must be positive")
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind=None, value=None):
        nonlocal i
        tok = toks[i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = repr(value) if value else {"num": "an integer", "var": "a variable"}.get(kind, kind)
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want}, found {got!r}", tok[2])
        i += 1
        return tok

    def integer():
        return int(take("num")[1])

    def factor(exp):
        _, name, pos = take("var")
        j = _var_index(name, ambient_dim, pos)
        power = 1
        if peek()[1] == "^":
            take("op", "^")
            sign = 1
            if peek()[1] == "-":
                sign_pos = take("op", "-")[2]
                sign = -1
                if not laurent:
                    raise ParseError("negative exponent requires the Laurent flag", sign_pos)
            power = sign * integer()
        exp[j] += power

    def term():
        exp = [0] * ambient_dim
        coeff = Fraction(1)
        kind, _, pos = peek()
        if kind == "num":
            num = integer()
            den = 1
            if peek()[1] == "/":
                slash = take("op", "/")[2]
                den = integer()
                if den == 0:
                    raise ParseError("division by zero", slash)
            coeff = Fraction(num, den)
        elif kind == "var":
            factor(exp)
        else:
            raise ParseError(f"expected a term, found {peek()[1] or 'end of input'!r}", pos)
        while peek()[1] == "*":
            take("op", "*")
            factor(exp)
        return tuple(exp), coeff

    terms: dict[tuple, Fraction] = {}
    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if take("op")[1] == "-" else 1
    while True:
        exp, c = term()
        terms[exp] = terms.get(exp, Fraction(0)) + sign * c
        kind, val, pos = peek()
        if kind == "end":
            break
        if val not in ("+", "-"):
            raise ParseError(f"unexpected {val!r}", pos)
        take("op")
        sign = 1 if val == "+" else -1

    poly = Polynomial(ambient_dim, terms, laurent)
    if not poly.terms:
        raise ParseError("polynomial is zero after combining like terms", 0)
    return poly


def variable_names(n: int) -> list[str]:
    return ["x", "y", "z"][:n] if n <= 3 else [f"x{i}" for i in range(1, n + 1)]


def _monomial(exp, names) -> str:
    parts = []
    for name, e in zip(names, exp):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(poly: Polynomial) -> str:
    """Render in descending graded lexicographic order; re-parses to ``poly``."""
    if not poly.terms:
        return "0"
    names = variable_names(poly.ambient_dim)
    out = []
    for exp in sorted(poly.terms, key=lambda e: (sum(e), e), reverse=True):
        c = poly.terms[exp]
        mono = _monomial(exp, names)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(out)


def face_part(poly: Polynomial, face: Face) -> Polynomial:
    """Sub-polynomial of the terms whose exponents lie on ``face``."""
    if face.polytope.ambient_dim != poly.ambient_dim:
        raise FaceError("face and polynomial live in different dimensions")
    supp = poly.terms
    origin = (0,) * poly.ambient_dim
    for v in face.vertices:
        if tuple(v) not in supp and tuple(v) != origin:
            raise FaceError(f"vertex {v} of the face is not an exponent of the polynomial")
    kept = {e: c for e, c in supp.items() if face.contains(e)}
    return Polynomial(poly.ambient_dim, kept, poly.laurent)
