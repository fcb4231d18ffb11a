"""Small exact linear algebra toolkit over the rationals.

Vectors are tuples of Fraction, matrices are tuples of row tuples.  Everything
is pure and deterministic; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def vec(entries: Iterable) -> Vector:
    """Coerce an iterable of numbers or 'p/q' strings to an exact vector."""
    return tuple(Fraction(e) for e in entries)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(r) for r in rows)


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    """Standard coordinate dot product."""
    if len(u) != len(v):
        raise ValueError("dimension mismatch: %d vs %d" % (len(u), len(v)))
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Fraction, u: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in u)


def is_zero(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence[Fraction]]) -> Matrix:
    return tuple(zip(*[tuple(r) for r in m])) if m else ()


def mat_vec(m: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns (exact Gauss-Jordan)."""
    m = [list(vec(r)) for r in rows]
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [inv * x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m), tuple(pivots)


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[1])


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vector:
    """Unique solution of a x = b; raises ValueError if none or not unique."""
    n_rows = len(a)
    if n_rows != len(b):
        raise ValueError("incompatible shapes")
    ncols = len(a[0]) if n_rows else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) < ncols:
        raise ValueError("underdetermined linear system")
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][ncols]
    return tuple(x)


def inverse(m: Sequence[Sequence[Fraction]]) -> Matrix:
    n = len(m)
    aug = [list(row) + list(identity(n)[i]) for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(red[i][n:]) for i in range(n))


def nullspace(rows: Sequence[Sequence[Fraction]]) -> tuple[Vector, ...]:
    """Deterministic basis of the right kernel."""
    if not rows:
        return ()
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(tuple(v))
    return tuple(basis)


def row_space_basis(rows: Sequence[Sequence[Fraction]]) -> tuple[Vector, ...]:
    """Deterministic basis of the row span (nonzero rows of the rref)."""
    red, pivots = rref(rows)
    return tuple(red[i] for i in range(len(pivots)))


def gram_matrix(vectors: Sequence[Sequence[Fraction]],
                pairing=dot) -> Matrix:
    return tuple(tuple(pairing(u, v) for v in vectors) for u in vectors)


def project_onto_span(basis: Sequence[Vector], v: Vector, pairing=dot) -> Vector:
    """Orthogonal projection of v onto span(basis) w.r.t. a definite pairing."""
    if not basis:
        return zero_vec(len(v))
    g = gram_matrix(basis, pairing)
    rhs = tuple(pairing(b, v) for b in basis)
    coeffs = solve(g, rhs)
    out = zero_vec(len(v))
    for c, b in zip(coeffs, basis):
        out = vadd(out, vscale(c, b))
    return out


def primitive(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a nonzero rational vector by a positive rational to a primitive
    integer vector (gcd 1); the direction is preserved exactly."""
    denoms = [f.denominator for f in v]
    scale = 1
    for d in denoms:
        scale = scale * d // gcd(scale, d)
    ints = [int(f * scale) for f in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in ints)


def frac_str(x: Fraction) -> str:
    """Compact 'p' or 'p/q' rendering used in all reports."""
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)
