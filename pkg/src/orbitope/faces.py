"""Face classification of coadjoint orbitopes by x-connected subsets.

A face class of conv(K.x) is encoded by the pair (I, J): I an x-connected
subset of the simple roots, J its x-saturation.  The finite, exact shadow of
the face is sigma = conv(W_J . x), a face of the Kostant polytope P =
conv(W . x); all cross-checks (exposedness, the bijection with W-classes of
polytope faces, containment order) run against that shadow in exact rational
arithmetic.  Extreme sets in the Lie algebra are never materialized: they are
infinite orbits and the pair (I, J) determines them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInputError, TheoremViolationError
from .linalg import Vector, dot, vadd, zero_vec
from .polytope import (DEFAULT_HULL_CAP, ExactPolytope, FaceOrbit,
                       PolytopeFace, act_on_faces, hull, support_set)
from .roots import ChamberPoint, RootSystem
from .weyl import WeylGroup, weyl_orbit


@dataclass(frozen=True)
class FaceDescriptor:
    """One K-class of faces, encoded combinatorially."""

    I: tuple[int, ...]
    I_prime: tuple[int, ...]
    J: tuple[int, ...]
    #: positive-root indices of the subsystems Delta_I, Delta_I', Delta_J
    sub_roots_I: tuple[int, ...]
    sub_roots_Iprime: tuple[int, ...]
    sub_roots_J: tuple[int, ...]
    dim_KF: int
    dim_KprimeF: int
    dim_ZF: int
    dim_face: int
    sigma: PolytopeFace
    exposing_u: Vector | None
    #: simple roots of I not vanishing on x (the marked Dynkin nodes)
    marked: tuple[int, ...]
    improper: bool

    @property
    def parabolic_E(self) -> tuple[int, ...]:
        return self.J

    @property
    def proper(self) -> bool:
        return not self.improper

    def label(self, rs: RootSystem) -> str:
        inner = ",".join(rs.root_label(i) for i in self.I)
        return "I={%s}" % inner


@dataclass
class FaceClassification:
    """All face classes of one orbitope, with the verified polytope matching."""

    x: ChamberPoint
    group: WeylGroup
    polytope: ExactPolytope
    descriptors: tuple[FaceDescriptor, ...]
    orbits: dict[int, tuple[FaceOrbit, ...]]
    #: I -> canonical W-class representative of sigma, proper descriptors only
    matching: dict[tuple[int, ...], tuple[int, ...]]
    bijection_verified: bool

    @property
    def root_system(self) -> RootSystem:
        return self.x.root_system

    @property
    def proper_descriptors(self) -> tuple[FaceDescriptor, ...]:
        return tuple(d for d in self.descriptors if d.proper)

    @property
    def top_descriptor(self) -> FaceDescriptor:
        return next(d for d in self.descriptors if d.improper)

    def descriptor_by_I(self, I: Sequence[int]) -> FaceDescriptor:
        key = tuple(sorted(I))
        for d in self.descriptors:
            if d.I == key:
                return d
        raise InvalidInputError("no descriptor with I = %s" % (key,))


def is_x_connected(rs: RootSystem, x: ChamberPoint, subset: Sequence[int]) -> bool:
    """Every connected component of the subset must see a root with alpha(x) != 0."""
    singular = set(x.singular_set)
    return all(any(i not in singular for i in comp) for comp in rs.components(subset))


def x_connected_subsets(rs: RootSystem, x: ChamberPoint) -> tuple[tuple[int, ...], ...]:
    """All x-connected subsets of the simple roots, smallest first.

    The empty set is x-connected by definition, so the list never is empty;
    for a full x the whole of Pi is always the last entry.
    """
    out = []
    for mask in range(1 << rs.rank):
        subset = tuple(i for i in range(rs.rank) if mask & (1 << i))
        if is_x_connected(rs, x, subset):
            out.append(subset)
    return tuple(sorted(out, key=lambda s: (len(s), s)))


def saturate(rs: RootSystem, x: ChamberPoint,
             I: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The x-saturation: I' = simple roots orthogonal to {ix} and to I; J = I + I'."""
    I = tuple(sorted(I))
    if not is_x_connected(rs, x, I):
        raise InvalidInputError("subset %s is not x-connected" % (I,))
    singular = set(x.singular_set)
    i_prime = tuple(i for i in range(rs.rank)
                    if i not in I and i in singular
                    and all(not rs.adjacent(i, j) for j in I))
    return i_prime, tuple(sorted(I + i_prime))


def largest_x_connected_subset(rs: RootSystem, x: ChamberPoint,
                               subset: Sequence[int]) -> tuple[int, ...]:
    """Union of those components of the subset containing a nonvanishing root."""
    singular = set(x.singular_set)
    keep: list[int] = []
    for comp in rs.components(subset):
        if any(i not in singular for i in comp):
            keep.extend(comp)
    return tuple(sorted(keep))


def classify_faces(rs: RootSystem, group: WeylGroup, x: ChamberPoint,
                   hull_cap: int = DEFAULT_HULL_CAP) -> FaceClassification:
    """Classify all faces of conv(K.x) up to conjugation and verify the
    bijection with Weyl classes of Kostant-polytope faces.

    Any failed cross-check raises TheoremViolationError: the statements being
    checked are theorems, so a failure is an implementation bug by definition.
    """
    if x.root_system is not rs:
        raise InvalidInputError("chamber point belongs to a different root system")
    orbit = weyl_orbit(group, x)
    note = "%s, x = (%s)" % (rs.name, ",".join(str(c) for c in x.coords))
    poly = hull(orbit, gram=rs.killing_ambient_gram(), origin_note=note, cap=hull_cap)
    if poly.vertices != orbit:
        raise TheoremViolationError(
            "Kostant polytope vertices differ from the Weyl orbit (ext P = W.x failed)")
    vertex_index = {v: i for i, v in enumerate(poly.vertices)}

    descriptors = []
    for I in x_connected_subsets(rs, x):
        i_prime, J = saturate(rs, x, I)
        sub_i = rs.subsystem_positive(I)
        sub_ip = rs.subsystem_positive(i_prime)
        sub_j = rs.subsystem_positive(J)
        if sorted(sub_i + sub_ip) != sorted(sub_j):
            raise TheoremViolationError("Delta_J does not split as Delta_I + Delta_I'")
        improper = len(J) == rs.rank
        sigma_vertices = tuple(sorted(vertex_index[v]
                                      for v in weyl_orbit(group, x, generator_indices=J)))
        if not poly.has_face(sigma_vertices):
            raise TheoremViolationError(
                "conv(W_J.x) is not a face of the Kostant polytope for I=%s" % (I,))
        sigma = poly.face(sigma_vertices)
        if sigma.dim != len(I):
            raise TheoremViolationError("dim sigma = %d but |I| = %d" % (sigma.dim, len(I)))
        exposing_u = None
        if not improper:
            u = zero_vec(rs.ambient_dim)
            for i in range(rs.rank):
                if i not in J:
                    u = vadd(u, rs.fundamental_coweights[i])
            exposed, _ = support_set(poly, u)
            if exposed.vertex_indices != sigma_vertices:
                raise TheoremViolationError(
                    "canonical u does not expose conv(W_J.x) for I=%s" % (I,))
            exposing_u = u
        descriptors.append(FaceDescriptor(
            I=I, I_prime=i_prime, J=J,
            sub_roots_I=sub_i, sub_roots_Iprime=sub_ip, sub_roots_J=sub_j,
            dim_KF=len(I) + 2 * len(sub_i),
            dim_KprimeF=len(i_prime) + 2 * len(sub_ip),
            dim_ZF=rs.rank - len(J),
            dim_face=len(I) + 2 * len(sub_i),
            sigma=sigma, exposing_u=exposing_u,
            marked=tuple(i for i in I if i not in x.singular_set),
            improper=improper))

    orbits = act_on_faces(group, poly)
    rep_of: dict[tuple[int, ...], tuple[int, ...]] = {}
    for dim, orbs in orbits.items():
        for o in orbs:
            for m in o.members:
                rep_of[m] = o.representative
    top_key = poly.top.vertex_indices
    proper_reps = sorted(rep for rep in {o.representative for orbs in orbits.values()
                                         for o in orbs} if rep != top_key)

    matching: dict[tuple[int, ...], tuple[int, ...]] = {}
    for d in descriptors:
        if d.improper:
            if d.sigma.vertex_indices != top_key:
                raise TheoremViolationError("J = Pi descriptor is not the top face")
            continue
        matching[d.I] = rep_of[d.sigma.vertex_indices]
    hit = sorted(matching.values())
    if len(set(hit)) != len(hit):
        raise TheoremViolationError(
            "two descriptors land in one polytope face class (phi not injective)")
    if hit != proper_reps:
        raise TheoremViolationError(
            "descriptors do not exhaust the polytope face classes (phi not surjective)")

    classification = FaceClassification(
        x=x, group=group, polytope=poly, descriptors=tuple(descriptors),
        orbits=orbits, matching=matching, bijection_verified=True)

    # psi . phi = id, checked on every class representative.
    for d in classification.proper_descriptors:
        rep_face = poly.face(matching[d.I])
        back = psi_of_polytope_face(classification, rep_face)
        if back.I != d.I:
            raise TheoremViolationError("psi(phi([F])) != [F] for I=%s" % (d.I,))
    return classification


def psi_of_polytope_face(classification: FaceClassification,
                         sigma: PolytopeFace) -> FaceDescriptor:
    """Map a proper polytope face to its descriptor: conjugate into the
    fundamental position and read (I, J) off the root data.

    Also re-derives J from the roots vanishing on the conjugated face's
    orthogonal complement and cross-checks it against the descriptor.
    """
    rs = classification.root_system
    poly = classification.polytope
    group = classification.group
    if sigma.vertex_indices == poly.top.vertex_indices:
        raise InvalidInputError("psi is defined on proper faces only")
    by_sigma = {d.sigma.vertex_indices: d for d in classification.proper_descriptors}
    perms = poly._permutations(group)
    found = None
    for e in group.elements:
        image = tuple(sorted(perms[e.matrix][i] for i in sigma.vertex_indices))
        if image in by_sigma:
            found = by_sigma[image]
            break
    if found is None:
        raise TheoremViolationError(
            "no Weyl conjugate of the face matches a descriptor "
            "(every face class must arise from an x-connected subset)")
    conj = poly.face(found.sigma.vertex_indices)
    E = tuple(i for i in range(rs.rank)
              if all(dot(rs.simple_roots[i], v) == 0 for v in conj.perp_basis))
    I = largest_x_connected_subset(rs, classification.x, E)
    _, J = saturate(rs, classification.x, I)
    if I != found.I or J != found.J:
        raise TheoremViolationError(
            "Z_K(sigma-perp) root data disagrees with the descriptor (I=%s)" % (found.I,))
    return found


def phi_of_descriptor(classification: FaceClassification,
                      d: FaceDescriptor) -> FaceOrbit:
    """The W-class of sigma = conv(W_J.x); the improper descriptor yields the
    top face's singleton class (callers must respect the improper flag)."""
    rep = d.sigma.vertex_indices if d.improper else classification.matching[d.I]
    for orbs in classification.orbits.values():
        for o in orbs:
            if o.representative == rep:
                return o
    raise TheoremViolationError("descriptor's face class is missing from the orbits")


def parabolic_report(classification: FaceClassification, d: FaceDescriptor) -> dict:
    """Combinatorial data of the standard parabolic P_E (E = J) attached to a
    proper face: Levi type, nilradical size and the extreme-orbit type."""
    rs = classification.root_system
    if d.improper:
        raise InvalidInputError(
            "the improper face corresponds to the full group, not a proper parabolic")
    levi_components = [rs.component_type(c) for c in rs.components(d.J)]
    torus_rank = rs.rank - len(d.J)
    levi_parts = "x".join(levi_components)
    if torus_rank:
        levi_parts = "%s+T%d" % (levi_parts, torus_rank) if levi_parts else "T%d" % torus_rank
    ext_components = []
    for comp in rs.components(d.I):
        ctype = rs.component_type(comp)
        order = rs._path_order(comp, {i: sum(1 for j in comp if rs.adjacent(i, j))
                                      for i in comp}) if len(comp) > 1 else list(comp)
        if len(order) != len(comp):
            order = sorted(comp)
        marks = tuple(order.index(i) + 1 for i in d.marked if i in comp)
        ext_components.append({"type": ctype, "marked_nodes": sorted(marks)})
    return {
        "E": [rs.root_label(i) for i in d.J],
        "levi_type": levi_parts,
        "levi_components": levi_components,
        "levi_torus_rank": torus_rank,
        "nilradical_positive_roots": rs.n_positive - len(d.sub_roots_J),
        "ext_type": {
            "components": ext_components,
            "description": _ext_description(ext_components),
        },
        "closed_orbit_note": "unique closed P_E-orbit in the coadjoint orbit",
    }


def _ext_description(components: list[dict]) -> str:
    """Readable name of ext F for the easy cases, a marked-type string otherwise."""
    if not components:
        return "point"
    if len(components) == 1 and components[0]["type"].startswith("A") \
            and len(components[0]["marked_nodes"]) == 1:
        m = int(components[0]["type"][1:])
        p = components[0]["marked_nodes"][0]
        p = min(p, m + 1 - p)
        if p == 1:
            return "P^%d" % m
        return "Gr(%d,%d)" % (p, m + 1)
    return " x ".join("%s%s" % (c["type"], list(c["marked_nodes"])) for c in components)
