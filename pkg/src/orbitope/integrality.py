"""Weight integrality of the orbit and its descent to faces.

The ambient verdict uses the lattice pairing 2<x,alpha>/<alpha,alpha>, whose
values on the simple roots are exactly the fundamental-weight coordinates.
The induced face weight x1' solves <x1', y>_F = <x1, y> against the honest
Killing form of k_F (the literal sum over Delta_I), and its verdict evaluates
the induced functional on coroots; with these conventions an integral orbit
induces an integral weight on every face, exactly.  Both the Knapp-style
value and its half (the alternative display differing by the known factor of
two) are emitted per root for audit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError
from .faces import FaceDescriptor
from .linalg import Vector, dot, project_onto_span, solve, vadd, vscale, zero_vec
from .roots import ChamberPoint, RootSystem


@dataclass(frozen=True)
class PairingRow:
    root: Vector
    knapp: Fraction
    half_display: Fraction


@dataclass(frozen=True)
class WeightData:
    """Integrality audit of the point x, with optional per-face tables."""

    lambda_coords: Vector
    is_integral: bool
    pairings: tuple[PairingRow, ...]
    face_weights: tuple["FaceWeight", ...] = ()


@dataclass(frozen=True)
class FaceWeight:
    """The weight induced on K_F by a face, with its own audit table."""

    I: tuple[int, ...]
    x1: Vector
    x1_prime: Vector
    pairings: tuple[PairingRow, ...]
    is_integral: bool


def check_integral(rs: RootSystem, x: ChamberPoint) -> WeightData:
    """Exact pairing table of x over the full root set and the verdict."""
    rows = []
    for a in rs.all_roots():
        knapp = 2 * rs.killing(x.vector, a) / rs.killing(a, a)
        rows.append(PairingRow(root=a, knapp=knapp, half_display=knapp / 2))
    return WeightData(lambda_coords=x.coords,
                      is_integral=all(r.knapp.denominator == 1 for r in rows),
                      pairings=tuple(rows))


def sub_killing(rs: RootSystem, root_indices: tuple[int, ...]):
    """The Killing pairing of the subalgebra spanned by a root subsystem."""
    roots = [rs.positive_roots[k] for k in root_indices]

    def pairing(u: Vector, v: Vector) -> Fraction:
        return 2 * sum((dot(a, u) * dot(a, v) for a in roots), Fraction(0))

    return pairing


def induce_face_weight(rs: RootSystem, x: ChamberPoint, d: FaceDescriptor) -> FaceWeight:
    """Solve <x1', y>_F = <x1, y> for the face weight and audit its integrality.

    x1 is the Killing-orthogonal component of x in t intersect k_F.  Vertex
    faces (I empty) carry the trivial group K_F and are rejected; the improper
    descriptor is allowed and returns x1' = x, the sub-Killing form being the
    ambient one.
    """
    if not d.I:
        raise InvalidInputError(
            "vertex faces carry the trivial group K_F; no induced weight exists")
    basis = [rs.simple_roots[i] for i in d.I]
    x1 = project_onto_span(basis, x.vector, pairing=rs.killing)
    pairing_f = sub_killing(rs, d.sub_roots_I)
    gram = tuple(tuple(pairing_f(bi, bj) for bj in basis) for bi in basis)
    rhs = tuple(rs.killing(x1, b) for b in basis)
    coeffs = solve(gram, rhs)
    x1p = zero_vec(rs.ambient_dim)
    for c, b in zip(coeffs, basis):
        x1p = vadd(x1p, vscale(c, b))

    rows = []
    for k in d.sub_roots_I:
        for sign in (1, -1):
            a = vscale(Fraction(sign), rs.positive_roots[k])
            value = pairing_f(x1p, rs.coroot(a))
            rows.append(PairingRow(root=a, knapp=value, half_display=value / 2))
    return FaceWeight(I=d.I, x1=x1, x1_prime=x1p, pairings=tuple(rows),
                      is_integral=all(r.knapp.denominator == 1 for r in rows))


def full_weight_data(rs: RootSystem, x: ChamberPoint, descriptors) -> WeightData:
    """The point audit together with the induced weight of every face class
    that carries a nontrivial K_F (the improper descriptor included)."""
    base = check_integral(rs, x)
    faces = tuple(induce_face_weight(rs, x, d) for d in descriptors if d.I)
    return WeightData(lambda_coords=base.lambda_coords,
                      is_integral=base.is_integral,
                      pairings=base.pairings, face_weights=faces)
