"""Exact convex geometry over the rationals.

Hulls are computed from the V-representation by double description on the
lifted cone, entirely in integer arithmetic; the face lattice is the closure
of the facet/vertex incidences under intersection.  This module is the
independent oracle the combinatorial face classification is checked against,
so there is no floating point anywhere.

A polytope may carry a nonstandard inner product (the Killing pairing of a
root system, given by its ambient Gram matrix).  Support sets, facet normal
vectors and orthogonal complements are all taken with respect to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CapExceededError, InvalidInputError, TheoremViolationError
from .linalg import (Matrix, Vector, dot, inverse, mat_vec, nullspace,
                     primitive, rank, row_space_basis, solve, transpose, vadd,
                     vec, vscale, vsub, zero_vec)
from .weyl import WeylElement, WeylGroup, vertex_permutations

#: desk-scale guard on hull input size
DEFAULT_HULL_CAP = 200


@dataclass(frozen=True)
class PolytopeFace:
    """A face, stored by its sorted vertex-index set.

    `direction_basis` spans the direction of aff(face); `perp_basis` spans its
    orthogonal complement (w.r.t. the polytope pairing) inside the direction
    space of the whole polytope, so the two dimensions add up to affine_dim.
    """

    vertex_indices: tuple[int, ...]
    dim: int
    direction_basis: tuple[Vector, ...]
    perp_basis: tuple[Vector, ...]


@dataclass(frozen=True)
class Facet:
    """Outward normal (as a pairing vector) and offset: <normal, x> <= offset."""

    normal: Vector
    offset: Fraction
    vertex_indices: tuple[int, ...]


@dataclass(frozen=True)
class FaceOrbit:
    """One W-orbit of faces of a fixed dimension, canonical representative first."""

    dim: int
    representative: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]


class ExactPolytope:
    """Exact polytope with full face lattice; immutable after construction."""

    def __init__(self, vertices: tuple[Vector, ...], ambient_dim: int, affine_dim: int,
                 gram: Matrix | None, facets: tuple[Facet, ...],
                 face_lattice: dict[int, tuple[PolytopeFace, ...]], origin_note: str):
        self.vertices = vertices
        self.ambient_dim = ambient_dim
        self.affine_dim = affine_dim
        self.gram = gram
        self.facets = facets
        self.face_lattice = face_lattice
        self.origin_note = origin_note
        self._by_vertices = {f.vertex_indices: f for fs in face_lattice.values() for f in fs}
        self._perm_cache: dict[int, dict] = {}
        self.parents: dict[tuple[int, ...], tuple[tuple[int, ...], ...]] = {}
        children: dict[tuple[int, ...], list[tuple[int, ...]]] = {
            f.vertex_indices: [] for f in self._by_vertices.values()}
        for d in sorted(face_lattice):
            for f in face_lattice[d]:
                ups = tuple(g.vertex_indices for g in face_lattice.get(d + 1, ())
                            if set(f.vertex_indices) <= set(g.vertex_indices))
                self.parents[f.vertex_indices] = ups
                for up in ups:
                    children[up].append(f.vertex_indices)
        self.children = {k: tuple(sorted(v)) for k, v in children.items()}

    # -- basic queries ------------------------------------------------------

    def pair(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        if self.gram is None:
            return dot(u, v)
        return dot(u, mat_vec(self.gram, v))

    @property
    def top(self) -> PolytopeFace:
        return self.face_lattice[self.affine_dim][0]

    def face(self, vertex_indices: Iterable[int]) -> PolytopeFace:
        key = tuple(sorted(vertex_indices))
        if key not in self._by_vertices:
            raise InvalidInputError("no face with vertex set %s" % (key,))
        return self._by_vertices[key]

    def has_face(self, vertex_indices: Iterable[int]) -> bool:
        return tuple(sorted(vertex_indices)) in self._by_vertices

    def proper_faces(self) -> tuple[PolytopeFace, ...]:
        out = []
        for d in sorted(self.face_lattice):
            for f in self.face_lattice[d]:
                if f is not self.top:
                    out.append(f)
        return tuple(out)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts per dimension, top face included."""
        return tuple(len(self.face_lattice[d]) for d in sorted(self.face_lattice))

    def facet_functionals(self) -> tuple[tuple[Vector, Fraction], ...]:
        """Facets as coordinate functionals (f, b) with f . x <= b on P."""
        out = []
        for fct in self.facets:
            f = fct.normal if self.gram is None else mat_vec(self.gram, fct.normal)
            out.append((f, fct.offset))
        return tuple(out)

    def _permutations(self, group: WeylGroup) -> dict:
        key = id(group)
        if key not in self._perm_cache:
            self._perm_cache[key] = vertex_permutations(group, self.vertices)
        return self._perm_cache[key]


def hull(points: Sequence[Sequence], gram: Matrix | None = None,
         origin_note: str = "", cap: int = DEFAULT_HULL_CAP) -> ExactPolytope:
    """Exact convex hull with complete face lattice.

    Points are deduplicated; the polytope is processed inside its affine hull,
    so lower-dimensional inputs are graded correctly.  Rejects more than `cap`
    points (desk-scale guard); a single repeated point yields the degenerate
    vertex-only polytope.
    """
    pts: list[Vector] = []
    seen = set()
    for p in points:
        v = vec(p)
        if v not in seen:
            seen.add(v)
            pts.append(v)
    if not pts:
        raise InvalidInputError("hull of an empty point set")
    if len(pts) > cap:
        raise CapExceededError("hull input has %d points, cap is %d" % (len(pts), cap))
    ambient_dim = len(pts[0])
    if any(len(p) != ambient_dim for p in pts):
        raise InvalidInputError("points have mixed dimensions")

    base = pts[0]
    diffs = [vsub(p, base) for p in pts[1:]]
    dir_basis = row_space_basis(diffs)
    d = len(dir_basis)

    if d == 0:
        face = PolytopeFace(vertex_indices=(0,), dim=0, direction_basis=(), perp_basis=())
        return ExactPolytope(vertices=(pts[0],), ambient_dim=ambient_dim, affine_dim=0,
                             gram=gram, facets=(), face_lattice={0: (face,)},
                             origin_note=origin_note)

    # Affine coordinates of every point w.r.t. the direction basis.
    bbt = tuple(tuple(dot(bi, bj) for bj in dir_basis) for bi in dir_basis)
    coords = []
    for p in pts:
        rhs = tuple(dot(bi, vsub(p, base)) for bi in dir_basis)
        coords.append(solve(bbt, rhs))

    rows = [primitive((Fraction(1),) + q) for q in coords]
    rays = _dd_rays(rows, d + 1)

    # Each extreme ray (a0, a) of the lifted dual cone is a valid inequality
    # a0 + a.q >= 0 on the coordinates, i.e. the facet (-a).q <= a0.
    facet_data = []
    for ray in rays:
        a0, a = ray[0], ray[1:]
        tight = tuple(i for i, q in enumerate(coords)
                      if a0 + sum(ai * qi for ai, qi in zip(a, q)) == 0)
        if any(a0 + sum(ai * qi for ai, qi in zip(a, q)) < 0 for q in coords):
            raise TheoremViolationError("double description produced a cut inequality (bug)")
        facet_data.append((tuple(-x for x in a), Fraction(a0), tight))

    # A point is a vertex iff its active facet functionals span the space.
    active_per_point: dict[int, list[int]] = {i: [] for i in range(len(pts))}
    for k, (_, _, tight) in enumerate(facet_data):
        for i in tight:
            active_per_point[i].append(k)
    vertex_ids = [i for i in range(len(pts))
                  if rank([vec(facet_data[k][0]) for k in active_per_point[i]]) == d]
    vertex_pts = sorted(pts[i] for i in vertex_ids)
    new_index = {v: i for i, v in enumerate(vertex_pts)}
    old_to_new = {i: new_index[pts[i]] for i in vertex_ids}

    def pair(u, v):
        return dot(u, v) if gram is None else dot(u, mat_vec(gram, v))

    pair_gram = tuple(tuple(pair(bi, bj) for bj in dir_basis) for bi in dir_basis)

    def functional_to_vector(n_aff: Sequence[Fraction]) -> Vector:
        ts = solve(pair_gram, tuple(Fraction(x) for x in n_aff))
        out = zero_vec(ambient_dim)
        for t, b in zip(ts, dir_basis):
            out = vadd(out, vscale(t, b))
        return out

    facets = []
    for n_aff, _, tight in facet_data:
        normal = vec(primitive(functional_to_vector(n_aff)))
        vidx = tuple(sorted(old_to_new[i] for i in tight if i in old_to_new))
        offset = pair(normal, vertex_pts[vidx[0]])
        values = [pair(normal, v) for v in vertex_pts]
        if any(val > offset for val in values):
            raise TheoremViolationError("facet normal conversion failed (bug)")
        if tuple(i for i, val in enumerate(values) if val == offset) != vidx:
            raise TheoremViolationError("facet tight set mismatch (bug)")
        facets.append(Facet(normal=normal, offset=offset, vertex_indices=vidx))
    facets.sort(key=lambda f: (f.vertex_indices, f.normal))

    lattice = _face_lattice(vertex_pts, tuple(facets), dir_basis, pair_gram, d)
    poly = ExactPolytope(vertices=tuple(vertex_pts), ambient_dim=ambient_dim, affine_dim=d,
                         gram=gram, facets=tuple(facets), face_lattice=lattice,
                         origin_note=origin_note)
    if tuple(f.vertex_indices for f in lattice[0]) != tuple((i,) for i in range(len(vertex_pts))):
        raise TheoremViolationError("0-faces do not match the vertex set (bug)")
    return poly


def _dd_rays(rows: Sequence[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone {y : row . y >= 0 for all rows}.

    Incremental double description with the combinatorial adjacency test;
    everything stays in primitive integer vectors.
    """
    chosen: list[int] = []
    basis_rows: list[Vector] = []
    for i, r in enumerate(rows):
        cand = basis_rows + [vec(r)]
        if rank(cand) > len(basis_rows):
            basis_rows = cand
            chosen.append(i)
        if len(chosen) == n:
            break
    if len(chosen) < n:
        raise TheoremViolationError("lifted cone is not pointed (bug)")

    inv = inverse(tuple(vec(rows[i]) for i in chosen))
    rays = [primitive(col) for col in transpose(inv)]

    order = chosen + [i for i in range(len(rows)) if i not in chosen]
    active = [0 for _ in rays]

    def int_dot(a, b):
        return sum(x * y for x, y in zip(a, b))

    for step, ri in enumerate(order):
        row = rows[ri]
        vals = [int_dot(row, r) for r in rays]
        if any(v < 0 for v in vals):
            keep = [k for k, v in enumerate(vals) if v >= 0]
            pos = [k for k, v in enumerate(vals) if v > 0]
            neg = [k for k, v in enumerate(vals) if v < 0]
            new_rays = []
            new_active = []
            for p in pos:
                for q in neg:
                    z = active[p] & active[q]
                    if any(k not in (p, q) and (z & active[k]) == z for k in range(len(rays))):
                        continue
                    combo = tuple(vals[p] * rn - vals[q] * rp
                                  for rp, rn in zip(rays[p], rays[q]))
                    new_rays.append(primitive(combo))
                    new_active.append(z | (1 << step))
            rays = [rays[k] for k in keep] + new_rays
            active = [active[k] | ((1 << step) if vals[k] == 0 else 0) for k in keep] + new_active
        else:
            active = [m | ((1 << step) if v == 0 else 0) for m, v in zip(active, vals)]
    return sorted(rays)


def _face_lattice(vertices: Sequence[Vector], facets: tuple[Facet, ...],
                  dir_basis: tuple[Vector, ...], pair_gram: Matrix,
                  d: int) -> dict[int, tuple[PolytopeFace, ...]]:
    """Close facet/vertex incidences under intersection and grade by dimension."""
    nv = len(vertices)
    full = (1 << nv) - 1
    facet_masks = []
    for f in facets:
        m = 0
        for i in f.vertex_indices:
            m |= 1 << i
        facet_masks.append(m)
    seen = {full}
    queue = [full]
    while queue:
        cur = queue.pop()
        for fm in facet_masks:
            nm = cur & fm
            if nm and nm not in seen:
                seen.add(nm)
                queue.append(nm)

    # The functional <normal, .> of each facet, as a row on direction-basis
    # coordinates; a face's affine hull is the intersection of its active
    # facet hyperplanes, so its direction is the joint kernel of these rows.
    bbt = tuple(tuple(dot(bi, bj) for bj in dir_basis) for bi in dir_basis)
    facet_rows = []
    for f in facets:
        ts = solve(bbt, tuple(dot(f.normal, b) for b in dir_basis))
        facet_rows.append(mat_vec(pair_gram, ts))
    identity_coords = tuple(tuple(Fraction(1 if i == j else 0) for j in range(d))
                            for i in range(d))

    levels: dict[int, list[PolytopeFace]] = {}
    for mask in seen:
        vidx = tuple(i for i in range(nv) if mask & (1 << i))
        act_rows = [facet_rows[k] for k, fm in enumerate(facet_masks) if (mask & fm) == mask]
        dir_coords = nullspace(act_rows) if act_rows else identity_coords
        direction = tuple(_from_coords(c, dir_basis) for c in dir_coords)
        dim = len(direction)
        perp_rows = [mat_vec(pair_gram, c) for c in dir_coords]
        perp_coords = nullspace(perp_rows) if perp_rows else identity_coords
        perp = tuple(_from_coords(c, dir_basis) for c in perp_coords)
        if dim + len(perp) != d:
            raise TheoremViolationError("face dimension bookkeeping failed (bug)")
        face = PolytopeFace(vertex_indices=vidx, dim=dim,
                            direction_basis=direction, perp_basis=perp)
        levels.setdefault(dim, []).append(face)
    return {dim: tuple(sorted(fs, key=lambda f: f.vertex_indices))
            for dim, fs in sorted(levels.items())}


def _from_coords(coords: Sequence[Fraction], dir_basis: tuple[Vector, ...]) -> Vector:
    out = zero_vec(len(dir_basis[0]))
    for c, b in zip(coords, dir_basis):
        out = vadd(out, vscale(c, b))
    return out


def support_set(p: ExactPolytope, u: Sequence) -> tuple[PolytopeFace, Fraction]:
    """Exposed face argmax_<.,u> together with the support value h_P(u)."""
    uv = vec(u)
    if all(x == 0 for x in uv):
        raise InvalidInputError("exposed faces require nonzero u")
    gu = uv if p.gram is None else mat_vec(p.gram, uv)
    values = [dot(v, gu) for v in p.vertices]
    h = max(values)
    vidx = tuple(i for i, val in enumerate(values) if val == h)
    if not p.has_face(vidx):
        raise TheoremViolationError("support set %s is not a lattice face (bug)" % (vidx,))
    return p.face(vidx), h


def act_on_faces(group: WeylGroup, p: ExactPolytope,
                 elements: Sequence[WeylElement] | None = None) -> dict[int, tuple[FaceOrbit, ...]]:
    """Partition every lattice level into orbits of the group action.

    `elements` may restrict the action to a subgroup (it must be closed under
    composition); the polytope's vertex set has to be stable under it.
    """
    perms = p._permutations(group)
    acting = tuple(elements) if elements is not None else group.elements
    out: dict[int, tuple[FaceOrbit, ...]] = {}
    for dim in sorted(p.face_lattice):
        assigned: set[tuple[int, ...]] = set()
        orbits = []
        for f in p.face_lattice[dim]:
            if f.vertex_indices in assigned:
                continue
            members = sorted({tuple(sorted(perms[e.matrix][i] for i in f.vertex_indices))
                              for e in acting})
            for m in members:
                if not p.has_face(m):
                    raise TheoremViolationError("group action left the face lattice (bug)")
            assigned.update(members)
            orbits.append(FaceOrbit(dim=dim, representative=min(members),
                                    members=tuple(members)))
        out[dim] = tuple(sorted(orbits, key=lambda o: o.representative))
    return out


def face_stabilizer(group: WeylGroup, p: ExactPolytope,
                    face: PolytopeFace) -> tuple[tuple[WeylElement, ...], tuple[Vector, ...]]:
    """The subgroup G_sigma = {g : g(sigma) = sigma} and its fixed subspace of t."""
    perms = p._permutations(group)
    target = face.vertex_indices
    stab = tuple(e for e in group.elements
                 if tuple(sorted(perms[e.matrix][i] for i in target)) == target)
    return stab, group.fixed_subspace(stab)


def fixed_vector_in_cone(group: WeylGroup, p: ExactPolytope, face: PolytopeFace) -> Vector:
    """A G_sigma-fixed vector exposing exactly the given proper face.

    Sums the outward normals of the facets containing the face and averages
    the result over the stabilizer, exactly as in the convex-cone argument.
    """
    if face.vertex_indices == p.top.vertex_indices:
        raise InvalidInputError("the whole polytope has no exposing vector")
    u = zero_vec(p.ambient_dim)
    for f in p.facets:
        if set(face.vertex_indices) <= set(f.vertex_indices):
            u = vadd(u, f.normal)
    stab, _ = face_stabilizer(group, p, face)
    avg = zero_vec(p.ambient_dim)
    for e in stab:
        avg = vadd(avg, group.apply(e, u))
    avg = vscale(Fraction(1, len(stab)), avg)
    exposed, _ = support_set(p, avg)
    if exposed.vertex_indices != face.vertex_indices:
        raise TheoremViolationError("averaged normal does not expose the face (bug)")
    return avg
