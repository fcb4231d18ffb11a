"""Face-type poset and stratum dimensions of the orbitope boundary.

The order on face types is containment up to conjugation, computed on the
polytope shadow: B1 <= B2 iff some Weyl translate of sigma(B1) is a face of
sigma(B2).  Stratum dimensions come from dim S_B = dim K - dim K'_F - dim Z_F;
strict monotonicity along the order is asserted, being a theorem.  That the
strata partition the boundary (each boundary point lies in exactly one open
face) is a recorded consequence and is not re-tested numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidInputError, TheoremViolationError
from .faces import FaceClassification, FaceDescriptor
from .roots import RootSystem


class StratumDims(NamedTuple):
    stratum: int
    face: int
    base: int


def stratum_dim(rs: RootSystem, d: FaceDescriptor) -> StratumDims:
    """dim S_B, dim F = dim k_F, and the flag-base dimension dim K - dim H_F."""
    if d.improper:
        raise InvalidInputError("stratum dimensions are defined for proper faces only")
    dim_k = rs.dim_group
    dim_hf = rs.rank + 2 * len(d.sub_roots_J)
    return StratumDims(stratum=dim_k - d.dim_KprimeF - d.dim_ZF,
                       face=d.dim_face,
                       base=dim_k - dim_hf)


@dataclass
class StratumPoset:
    """Proper face types plus the top node, partially ordered by containment."""

    #: node order matches classification.descriptors (top = improper entry)
    nodes: tuple[FaceDescriptor, ...]
    #: strict order pairs (i, j) meaning node i < node j, transitively closed
    order: frozenset[tuple[int, int]]
    cover_edges: tuple[tuple[int, int], ...]
    stratum_dims: dict[int, int]
    face_dims: dict[int, int]
    base_flag_dims: dict[int, int]

    def less(self, i: int, j: int) -> bool:
        return (i, j) in self.order


def build_poset(classification: FaceClassification) -> StratumPoset:
    """Order the face types through the polytope lattice and check the
    stratification dimension inequalities."""
    rs = classification.root_system
    group = classification.group
    poly = classification.polytope
    nodes = classification.descriptors
    perms = poly._permutations(group)

    masks = []
    for d in nodes:
        m = 0
        for i in d.sigma.vertex_indices:
            m |= 1 << i
        masks.append(m)
    images = []
    for d in nodes:
        imgs = set()
        for e in group.elements:
            m = 0
            for i in d.sigma.vertex_indices:
                m |= 1 << perms[e.matrix][i]
            imgs.add(m)
        images.append(imgs)

    n = len(nodes)
    rel = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            rel[i][j] = any((im & masks[j]) == im for im in images[i])
    # reflexive-transitive closure of the strict part
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                for j in range(n):
                    if rel[k][j]:
                        rel[i][j] = True
    for i in range(n):
        for j in range(i + 1, n):
            if rel[i][j] and rel[j][i]:
                raise TheoremViolationError("face-type order is not antisymmetric (bug)")

    s_dims: dict[int, int] = {}
    f_dims: dict[int, int] = {}
    b_dims: dict[int, int] = {}
    for idx, d in enumerate(nodes):
        if d.improper:
            continue
        dims = stratum_dim(rs, d)
        s_dims[idx] = dims.stratum
        f_dims[idx] = dims.face
        b_dims[idx] = dims.base
        # root-space bookkeeping of H_F = Z_F . K_F . K'_F
        outside = rs.n_positive - len(d.sub_roots_J)
        if rs.dim_group != d.dim_ZF + d.dim_KF + d.dim_KprimeF + 2 * outside:
            raise TheoremViolationError("dim K bookkeeping failed for I=%s" % (d.I,))

    order = frozenset((i, j) for i in range(n) for j in range(n) if rel[i][j])
    for i, j in order:
        if nodes[i].dim_face >= nodes[j].dim_face:
            raise TheoremViolationError("face dimension not strictly monotone along <")
        if i in s_dims and j in s_dims and s_dims[i] >= s_dims[j]:
            raise TheoremViolationError("stratum dimension not strictly monotone along <")

    covers = tuple(sorted((i, j) for i, j in order
                          if not any((i, k) in order and (k, j) in order for k in range(n))))
    return StratumPoset(nodes=nodes, order=order, cover_edges=covers,
                        stratum_dims=s_dims, face_dims=f_dims, base_flag_dims=b_dims)
