"""Exact rational and integer linear algebra on small dense matrices.

Vectors are tuples, matrices are lists of row tuples.  Entries are Python
``int`` or :class:`fractions.Fraction`; nothing here ever touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

Vector = tuple
Number = "int | Fraction"


def as_number(x):
    """Return ``x`` as an ``int`` when it is integral, else as a ``Fraction``."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def integerize(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector by the lcm of its denominators."""
    fr = [Fraction(x) for x in v]
    m = 1
    for x in fr:
        m = lcm(m, x.denominator)
    return tuple(int(x * m) for x in fr)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Primitive integer vector on the ray through ``v`` (zero stays zero)."""
    w = integerize(v)
    g = 0
    for x in w:
        g = gcd(g, x)
    if g == 0:
        return w
    return tuple(x // g for x in w)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def rref(rows: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows)[1])


def solve_coordinates(basis: Sequence[Sequence], v: Sequence) -> Optional[list]:
    """Coefficients c with sum(c_i * basis_i) == v, or None if v is outside the span.

    ``basis`` must be linearly independent.
    """
    k = len(basis)
    if k == 0:
        return [] if all(x == 0 for x in v) else None
    n = len(v)
    # augmented system: columns are basis vectors
    aug = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(n)]
    red, piv = rref(aug)
    if k in piv:
        return None
    coeffs = [Fraction(0)] * k
    for row, c in zip(red, piv):
        coeffs[c] = row[k]
    return [as_number(c) for c in coeffs]


def column_echelon(a: Sequence[Sequence[int]], ncols: int):
    """Integer column echelon form.

    Returns ``(h, u, pivot_rows)`` with ``a @ u == h``, ``u`` unimodular and
    the nonzero columns of ``h`` exactly its first ``len(pivot_rows)`` ones;
    column ``j`` of ``h`` has its topmost nonzero entry in ``pivot_rows[j]``.
    """
    h = [list(r) for r in a]
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def col_op(dst, src, q):  # col[dst] -= q * col[src]
        for row in h:
            row[dst] -= q * row[src]
        for row in u:
            row[dst] -= q * row[src]

    def col_swap(i, j):
        for row in h:
            row[i], row[j] = row[j], row[i]
        for row in u:
            row[i], row[j] = row[j], row[i]

    pivot_rows = []
    c = 0
    for r in range(len(h)):
        if c == ncols:
            break
        while True:
            nz = [j for j in range(c, ncols) if h[r][j] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(h[r][j]))
            if j0 != c:
                col_swap(c, j0)
            done = True
            for j in range(c + 1, ncols):
                if h[r][j]:
                    col_op(j, c, h[r][j] // h[r][c])
                    if h[r][j]:
                        done = False
            if done:
                break
        if any(h[r][j] for j in range(c, ncols)):
            if h[r][c] < 0:
                for row in h:
                    row[c] = -row[c]
                for row in u:
                    row[c] = -row[c]
            pivot_rows.append(r)
            c += 1
    return h, u, pivot_rows


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """A basis of {x in Z^n : rows @ x == 0} (saturated by construction)."""
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    _, u, piv = column_echelon([integerize(r) for r in rows], ncols)
    return [tuple(u[i][j] for i in range(ncols)) for j in range(len(piv), ncols)]


def integer_solution(rows: Sequence[Sequence], rhs: Sequence, ncols: int) -> Optional[tuple[int, ...]]:
    """Some x in Z^n with rows @ x == rhs, or None if no integral solution exists."""
    if not rows:
        return tuple([0] * ncols)
    # clear denominators row by row
    a, b = [], []
    for r, y in zip(rows, rhs):
        full = integerize(list(r) + [y])
        a.append(full[:-1])
        b.append(full[-1])
    h, u, piv = column_echelon(a, ncols)
    y = [0] * ncols
    for c, r in enumerate(piv):
        acc = b[r] - sum(h[r][j] * y[j] for j in range(c))
        if acc % h[r][c]:
            return None
        y[c] = acc // h[r][c]
    for r in range(len(h)):
        if sum(h[r][j] * y[j] for j in range(ncols)) != b[r]:
            return None
    return tuple(sum(u[i][j] * y[j] for j in range(ncols)) for i in range(ncols))


def hnf(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row Hermite normal form of the lattice spanned by integer ``rows``.

    Pivots are positive, entries above a pivot are reduced into [0, pivot);
    zero rows are dropped, so the result is a basis.
    """
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(m[i][c]))
            m[r], m[i0] = m[i0], m[r]
            done = True
            for i in range(r + 1, len(m)):
                if m[i][c]:
                    q = m[i][c] // m[r][c]
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                    if m[i][c]:
                        done = False
            if done:
                break
        if r < len(m) and m[r][c] != 0:
            if m[r][c] < 0:
                m[r] = [-x for x in m[r]]
            for i in range(r):
                q = m[i][c] // m[r][c]
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
            r += 1
            if r == len(m):
                break
    return [tuple(row) for row in m[:r]]


def saturated_basis(vectors: Sequence[Sequence], n: int) -> list[tuple[int, ...]]:
    """HNF basis of span(vectors) ∩ Z^n."""
    vecs = [integerize(v) for v in vectors if any(x != 0 for x in v)]
    if not vecs:
        return []
    perp = integer_kernel(vecs, n)
    if not perp:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return hnf(integer_kernel(perp, n))


def det(m: Sequence[Sequence]) -> Fraction:
    """Determinant over Q by elimination."""
    a = [[Fraction(x) for x in r] for r in m]
    k = len(a)
    sign = 1
    out = Fraction(1)
    for c in range(k):
        p = next((i for i in range(c, k) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        out *= a[c][c]
        for i in range(c + 1, k):
            if a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return sign * out
