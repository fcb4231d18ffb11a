"""Weyl groups as explicit finite matrix groups over the rationals.

Elements act on simple-coroot coordinates by integer matrices (exact and
hashable); the ambient action on the realization of t is recovered through
the coroot basis.  Enumeration is a breadth-first closure over the simple
reflections, so every stored word is reduced and the ordering is
deterministic: by word length, then word, then matrix entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CapExceededError, InvalidInputError
from .linalg import Vector, dot, inverse, mat_mul, mat_vec, nullspace, transpose
from .roots import ChamberPoint, RootSystem

#: desk-scale guard on the group order
DEFAULT_WEYL_CAP = 2000

IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class WeylElement:
    """One group element: integer matrix on coroot coordinates + reduced word."""

    matrix: IntMatrix
    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)


class WeylGroup:
    """The full Weyl group of a root system, explicitly enumerated."""

    def __init__(self, root_system: RootSystem, elements: tuple[WeylElement, ...]):
        self.root_system = root_system
        self.elements = elements
        self.word_index = {e.matrix: e.word for e in elements}
        self.generators = tuple(e for e in elements if e.length == 1)
        r = root_system.rank
        coroots = [root_system.coroot(a) for a in root_system.simple_roots]
        #: ambient coroot-basis matrix (columns are simple coroots)
        self._basis = transpose(tuple(coroots))
        bt = tuple(coroots)
        gram = tuple(tuple(dot(u, v) for v in coroots) for u in coroots)
        self._left_inv = mat_mul(inverse(gram), bt)
        self._identity = tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    def apply(self, element: WeylElement, v: Vector) -> Vector:
        """Action on an ambient vector of the root span."""
        coords = mat_vec(self._left_inv, v)
        moved = tuple(sum((Fraction(m) * c for m, c in zip(row, coords)), Fraction(0))
                      for row in element.matrix)
        return mat_vec(self._basis, moved)

    def fixed_subspace(self, elements: Iterable[WeylElement]) -> tuple[Vector, ...]:
        """Basis (in ambient coordinates) of the subspace of t fixed by all elements."""
        rows: list[Vector] = []
        r = self.root_system.rank
        for e in elements:
            for i in range(r):
                row = tuple(Fraction(e.matrix[i][j] - (1 if i == j else 0)) for j in range(r))
                rows.append(row)
        if not rows:
            basis = tuple(tuple(Fraction(1 if i == j else 0) for j in range(r)) for i in range(r))
        else:
            basis = nullspace(rows)
        return tuple(mat_vec(self._basis, b) for b in basis)


def _generator_matrix(rs: RootSystem, i: int) -> IntMatrix:
    """Matrix of the simple reflection s_i on simple-coroot coordinates.

    s_i sends the coroot b_j to b_j - C[i][j] * b_i with C the Cartan matrix.
    """
    r = rs.rank
    rows = [[1 if k == j else 0 for j in range(r)] for k in range(r)]
    for j in range(r):
        rows[i][j] -= rs.cartan_matrix[i][j]
    return tuple(tuple(row) for row in rows)


def _int_mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def build_weyl_group(rs: RootSystem, cap: int = DEFAULT_WEYL_CAP) -> WeylGroup:
    """Enumerate the Weyl group by closing the simple reflections.

    Rejects groups larger than `cap` (desk-scale guard).
    """
    r = rs.rank
    gens = [_generator_matrix(rs, i) for i in range(r)]
    identity = tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))
    words: dict[IntMatrix, tuple[int, ...]] = {identity: ()}
    layer = [identity]
    while layer:
        next_layer = []
        for m in sorted(layer):
            for i in range(r):
                nm = _int_mat_mul(gens[i], m)
                if nm not in words:
                    words[nm] = (i,) + words[m]
                    next_layer.append(nm)
                    if len(words) > cap:
                        raise CapExceededError(
                            "Weyl group of %s has more than %d elements; "
                            "raise the cap to proceed" % (rs.name, cap))
        layer = next_layer
    elements = tuple(WeylElement(matrix=m, word=w)
                     for m, w in sorted(words.items(), key=lambda kv: (len(kv[1]), kv[1], kv[0])))
    group = WeylGroup(rs, elements)
    for i, gen in enumerate(group.generators):
        for a in rs.simple_roots:
            if group.apply(gen, a) != rs.reflect(rs.simple_roots[gen.word[0]], a):
                raise InvalidInputError("generator action mismatch (bug)")
    return group


def weyl_orbit(group: WeylGroup, x: ChamberPoint | Vector,
               generator_indices: Sequence[int] | None = None) -> tuple[Vector, ...]:
    """Orbit of a point of t under the group (or a standard parabolic subgroup).

    Returns deduplicated vectors in lexicographic order; the orbit size always
    divides the group order.
    """
    rs = group.root_system
    start = x.vector if isinstance(x, ChamberPoint) else tuple(x)
    gens = range(rs.rank) if generator_indices is None else tuple(generator_indices)
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for i in gens:
            w = rs.reflect(rs.simple_roots[i], v)
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    orbit = tuple(sorted(seen))
    if generator_indices is None and group.order % len(orbit) != 0:
        raise InvalidInputError("orbit size %d does not divide |W| = %d (bug)"
                                % (len(orbit), group.order))
    return orbit


def vertex_permutations(group: WeylGroup, vectors: Sequence[Vector]) -> dict[IntMatrix, tuple[int, ...]]:
    """Permutation action of every element on a W-stable list of vectors.

    Raises InvalidInputError if the list is not stable under the group.
    """
    rs = group.root_system
    index = {v: i for i, v in enumerate(vectors)}
    gen_perms: dict[int, tuple[int, ...]] = {}
    for gen in group.generators:
        i = gen.word[0]
        images = []
        for v in vectors:
            w = rs.reflect(rs.simple_roots[i], v)
            if w not in index:
                raise InvalidInputError("vertex set is not stable under the Weyl group")
            images.append(index[w])
        gen_perms[i] = tuple(images)
    perms: dict[tuple[int, ...], tuple[int, ...]] = {(): tuple(range(len(vectors)))}
    for e in sorted(group.elements, key=lambda e: (e.length, e.word)):
        if e.word in perms:
            continue
        parent = perms[e.word[1:]]
        head = gen_perms[e.word[0]]
        perms[e.word] = tuple(head[j] for j in parent)
    return {e.matrix: perms[e.word] for e in group.elements}
