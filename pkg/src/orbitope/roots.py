"""Root systems of types A-G over exact rationals.

Realizations are the standard integer / half-integer coordinate ones, so every
root, weight and chamber point has exact Fraction coordinates.  A point x of
the Cartan subalgebra t is represented by the ambient vector X with
-i*alpha(x) = d(alpha, X) for every root alpha (d the coordinate dot product);
in these real coordinates the complexified chamber condition -i*alpha(v) > 0
reads d(alpha, v) > 0.  The Killing pairing is the literal trace-form sum
Sum_{alpha in Delta} d(alpha,u)*d(alpha,v), i.e. the honest -B restricted to t
under that dictionary, not a short-root normalization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInputError
from .linalg import (Matrix, Vector, dot, inverse, mat_vec, solve, transpose,
                     vadd, vec, vscale, vsub, zero_vec)

#: admissible ranks per Cartan letter (rank 8 is the desk-scale ceiling)
VALID_RANKS = {
    "A": range(1, 9),
    "B": range(2, 9),
    "C": range(3, 9),
    "D": range(4, 9),
    "E": (6, 7, 8),
    "F": (4,),
    "G": (2,),
}

_POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def _unit(m: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(m))


def _simple_root_realization(type_label: str, rank: int) -> tuple[int, tuple[Vector, ...]]:
    """Ambient dimension and simple roots in the standard realization."""
    e = _unit
    if type_label == "A":
        m = rank + 1
        return m, tuple(vsub(e(m, i), e(m, i + 1)) for i in range(rank))
    if type_label == "B":
        m = rank
        simples = [vsub(e(m, i), e(m, i + 1)) for i in range(rank - 1)]
        simples.append(e(m, rank - 1))
        return m, tuple(simples)
    if type_label == "C":
        m = rank
        simples = [vsub(e(m, i), e(m, i + 1)) for i in range(rank - 1)]
        simples.append(vscale(Fraction(2), e(m, rank - 1)))
        return m, tuple(simples)
    if type_label == "D":
        m = rank
        simples = [vsub(e(m, i), e(m, i + 1)) for i in range(rank - 1)]
        simples.append(vadd(e(m, rank - 2), e(m, rank - 1)))
        return m, tuple(simples)
    if type_label == "G":
        return 3, (vec([1, -1, 0]), vec([-2, 1, 1]))
    if type_label == "F":
        return 4, (vec([0, 1, -1, 0]), vec([0, 0, 1, -1]), vec([0, 0, 0, 1]),
                   vec(["1/2", "-1/2", "-1/2", "-1/2"]))
    # type E in the Bourbaki coordinates of E8; E6/E7 are the leading simples
    m = 8
    half = Fraction(1, 2)
    a1 = (half, -half, -half, -half, -half, -half, -half, half)
    a2 = vadd(e(m, 0), e(m, 1))
    chain = tuple(vsub(e(m, i + 1), e(m, i)) for i in range(6))
    return m, ((a1, a2) + chain)[:rank]


@dataclass(frozen=True)
class RootSystem:
    """Exact root data for one simple type at a fixed rank."""

    type_label: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    #: integer coefficients of each positive root on the simple basis
    positive_coords: tuple[tuple[int, ...], ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    #: Gram matrix of the simple coroots under the Killing pairing
    killing_gram: Matrix
    fundamental_weights: tuple[Vector, ...]
    fundamental_coweights: tuple[Vector, ...]
    #: Killing / coordinate-dot ratio on the root span (a positive integer)
    killing_ratio: Fraction

    # -- basic queries ------------------------------------------------------

    @property
    def name(self) -> str:
        return "%s%d" % (self.type_label, self.rank)

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def dim_group(self) -> int:
        """dim K = rank + 2*|Delta_+| (each root plane Z_alpha is 2-dim)."""
        return self.rank + 2 * self.n_positive

    def all_roots(self) -> tuple[Vector, ...]:
        return self.positive_roots + tuple(vscale(Fraction(-1), a) for a in self.positive_roots)

    def coroot(self, alpha: Vector) -> Vector:
        return vscale(Fraction(2) / dot(alpha, alpha), alpha)

    def reflect(self, alpha: Vector, v: Vector) -> Vector:
        c = Fraction(2) * dot(alpha, v) / dot(alpha, alpha)
        return tuple(x - c * a for x, a in zip(v, alpha))

    def killing(self, u: Vector, v: Vector) -> Fraction:
        """The pairing <u,v> = -B(u,v) as a sum over the full root set."""
        return 2 * sum((dot(a, u) * dot(a, v) for a in self.positive_roots), Fraction(0))

    def killing_ambient_gram(self) -> Matrix:
        """Ambient Gram matrix of the Killing pairing (PSD; definite on the span)."""
        m = self.ambient_dim
        units = [_unit(m, i) for i in range(m)]
        return tuple(tuple(self.killing(units[i], units[j]) for j in range(m)) for i in range(m))

    def root_label(self, i: int) -> str:
        return "a%d" % (i + 1)

    # -- Dynkin diagram combinatorics --------------------------------------

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and dot(self.simple_roots[i], self.simple_roots[j]) != 0

    def components(self, subset: Sequence[int]) -> tuple[tuple[int, ...], ...]:
        """Connected components of a simple-root subset, ordered by least index."""
        todo = sorted(set(subset))
        comps: list[tuple[int, ...]] = []
        while todo:
            frontier = [todo.pop(0)]
            comp = set(frontier)
            while frontier:
                i = frontier.pop()
                for j in list(todo):
                    if self.adjacent(i, j):
                        todo.remove(j)
                        comp.add(j)
                        frontier.append(j)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def subsystem_positive(self, subset: Sequence[int]) -> tuple[int, ...]:
        """Indices of positive roots supported on the given simple subset."""
        s = set(subset)
        return tuple(k for k, coeffs in enumerate(self.positive_coords)
                     if all(c == 0 or i in s for i, c in enumerate(coeffs)))

    def component_type(self, comp: Sequence[int]) -> str:
        """Cartan label ('A3', 'B2', ...) of one connected simple-root subset."""
        comp = tuple(comp)
        r = len(comp)
        if r == 1:
            return "A1"
        c = self.cartan_matrix
        mult = {(i, j): c[i][j] * c[j][i] for i in comp for j in comp
                if i < j and self.adjacent(i, j)}
        degrees = {i: sum(1 for j in comp if self.adjacent(i, j)) for i in comp}
        if any(m == 3 for m in mult.values()):
            if r != 2:
                raise InvalidInputError("triple bond outside G2")
            return "G2"
        if any(m == 2 for m in mult.values()):
            if r == 2:
                return "B2"
            path = self._path_order(comp, degrees)
            (i, j), = [k for k, m in mult.items() if m == 2]
            pos = sorted((path.index(i), path.index(j)))
            if pos == [0, 1] or pos == [r - 2, r - 1]:
                end = path[0] if pos == [0, 1] else path[-1]
                end_sq = dot(self.simple_roots[end], self.simple_roots[end])
                other = path[1] if pos == [0, 1] else path[-2]
                other_sq = dot(self.simple_roots[other], self.simple_roots[other])
                return ("B%d" if end_sq < other_sq else "C%d") % r
            if r != 4:
                raise InvalidInputError("interior double bond outside F4")
            return "F4"
        branch = [i for i, dg in degrees.items() if dg == 3]
        if not branch:
            return "A%d" % r
        if len(branch) > 1:
            raise InvalidInputError("unrecognized simply-laced diagram")
        arms = sorted(self._arm_lengths(comp, branch[0]))
        if arms[0] == 1 and arms[1] == 1:
            return "D%d" % r
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return {2: "E6", 3: "E7", 4: "E8"}[arms[2]]
        raise InvalidInputError("unrecognized simply-laced diagram")

    def _path_order(self, comp: tuple[int, ...], degrees: dict[int, int]) -> list[int]:
        """Walk a chain component end-to-end, starting at the smaller endpoint."""
        ends = sorted(i for i in comp if degrees[i] <= 1)
        order = [ends[0]]
        while len(order) < len(comp):
            nxt = [j for j in comp if j not in order and self.adjacent(order[-1], j)]
            order.append(nxt[0])
        return order

    def _arm_lengths(self, comp: tuple[int, ...], center: int) -> list[int]:
        lengths = []
        for start in (j for j in comp if self.adjacent(center, j)):
            n, prev, cur = 1, center, start
            while True:
                nxt = [j for j in comp if j not in (prev, cur) and self.adjacent(cur, j)]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                n += 1
            lengths.append(n)
        return lengths


def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Construct exact root data; rejects invalid (type, rank) pairs."""
    type_label = str(type_label).upper()
    if type_label not in VALID_RANKS:
        raise InvalidInputError("unknown root system type %r (expected one of A-G)" % type_label)
    if rank not in VALID_RANKS[type_label]:
        raise InvalidInputError(
            "invalid pair %s_%d: admissible ranks for type %s are %s" %
            (type_label, rank, type_label, list(VALID_RANKS[type_label])))
    ambient_dim, simples = _simple_root_realization(type_label, rank)

    # Close the simple roots under simple reflections; for an irreducible
    # system this BFS reaches the whole root set.
    def reflect(alpha: Vector, v: Vector) -> Vector:
        c = Fraction(2) * dot(alpha, v) / dot(alpha, alpha)
        return tuple(x - c * a for x, a in zip(v, alpha))

    roots = set(simples)
    frontier = list(simples)
    while frontier:
        v = frontier.pop()
        for a in simples:
            w = reflect(a, v)
            if w not in roots:
                roots.add(w)
                frontier.append(w)

    # Expand each root on the simple basis; keep the nonnegative ones.
    basis_t = transpose(simples)
    positives: list[tuple[tuple[int, ...], Vector]] = []
    for v in roots:
        coeffs = solve(basis_t, v)
        ints = tuple(int(c) for c in coeffs)
        if any(Fraction(i) != c for i, c in zip(ints, coeffs)):
            raise InvalidInputError("non-integral root expansion (bug in realization)")
        if all(c >= 0 for c in ints) and any(ints):
            positives.append((ints, v))
        elif not all(c <= 0 for c in ints):
            raise InvalidInputError("root with mixed-sign expansion (bug in realization)")
    positives.sort(key=lambda p: (sum(p[0]), p[0]))
    expected = _POSITIVE_COUNTS[type_label](rank)
    if len(positives) != expected:
        raise InvalidInputError("positive root count %d != classical %d for %s%d"
                                % (len(positives), expected, type_label, rank))

    cartan = tuple(tuple(int(2 * dot(a, b) / dot(b, b)) for b in simples) for a in simples)

    pos_roots = tuple(v for _, v in positives)

    def killing(u: Vector, v: Vector) -> Fraction:
        return 2 * sum((dot(a, u) * dot(a, v) for a in pos_roots), Fraction(0))

    coroots = tuple(vscale(Fraction(2) / dot(a, a), a) for a in simples)
    killing_gram = tuple(tuple(killing(bi, bj) for bj in coroots) for bi in coroots)
    ratio = killing(simples[0], simples[0]) / dot(simples[0], simples[0])

    # Fundamental weights (dual to simple coroots) and coweights (dual to
    # simple roots), both inside the root span.
    cartan_q = tuple(tuple(Fraction(x) for x in row) for row in cartan)
    inv_ct = inverse(transpose(cartan_q))
    inv_c = inverse(cartan_q)
    weights = []
    coweights = []
    for i in range(rank):
        unit = tuple(Fraction(1 if j == i else 0) for j in range(rank))
        wc = mat_vec(inv_ct, unit)
        weights.append(_combine(simples, wc))
        cc = mat_vec(inv_c, unit)
        coweights.append(_combine(coroots, cc))

    rs = RootSystem(
        type_label=type_label,
        rank=rank,
        ambient_dim=ambient_dim,
        simple_roots=simples,
        positive_roots=pos_roots,
        positive_coords=tuple(c for c, _ in positives),
        cartan_matrix=cartan,
        killing_gram=killing_gram,
        fundamental_weights=tuple(weights),
        fundamental_coweights=tuple(coweights),
        killing_ratio=ratio,
    )
    for i in range(rank):
        for j in range(rank):
            if dot(rs.fundamental_weights[i], rs.coroot(simples[j])) != (1 if i == j else 0):
                raise InvalidInputError("fundamental weight duality failed (bug)")
        if rs.killing_gram[i][i] <= 0:
            raise InvalidInputError("killing gram not positive definite (bug)")
    return rs


def killing_pairing(rs: RootSystem, h1: Vector, h2: Vector) -> Fraction:
    """Functional form of the Killing pairing on t (see RootSystem.killing)."""
    return rs.killing(vec(h1), vec(h2))


def _combine(vectors: Sequence[Vector], coeffs: Sequence[Fraction]) -> Vector:
    out = zero_vec(len(vectors[0]))
    for c, v in zip(coeffs, vectors):
        out = vadd(out, vscale(c, v))
    return out


@dataclass(frozen=True)
class ChamberPoint:
    """A rational point of the closed positive Weyl chamber.

    `coords` are the fundamental-weight coordinates (the user-facing basis);
    `vector` is the same point in the ambient realization of t.
    """

    root_system: RootSystem = field(repr=False)
    coords: Vector
    vector: Vector
    singular_set: tuple[int, ...]

    @property
    def regular(self) -> bool:
        return not self.singular_set

    def evaluate_root(self, alpha: Vector) -> Fraction:
        """-i*alpha(x) in the realization, i.e. d(alpha, X)."""
        return dot(alpha, self.vector)


def chamber_point(rs: RootSystem, coords: Sequence) -> ChamberPoint:
    """Validate fundamental-weight coordinates and build the chamber point.

    Rejects points outside the closed chamber and non-full points (a whole
    simple factor of K acting trivially), naming the dead component.
    """
    cs = vec(coords)
    if len(cs) != rs.rank:
        raise InvalidInputError("expected %d coordinates for %s, got %d"
                                % (rs.rank, rs.name, len(cs)))
    negative = [i for i, c in enumerate(cs) if c < 0]
    if negative:
        raise InvalidInputError(
            "coordinate %s is negative: the point is outside the closed positive chamber"
            % rs.root_label(negative[0]))
    singular = tuple(i for i, c in enumerate(cs) if c == 0)
    for comp in rs.components(range(rs.rank)):
        if all(i in singular for i in comp):
            raise InvalidInputError(
                "point is not full: the simple factor on {%s} acts trivially "
                "(reduce to the other factors first)"
                % ",".join(rs.root_label(i) for i in comp))
    x = zero_vec(rs.ambient_dim)
    for c, w in zip(cs, rs.fundamental_weights):
        x = vadd(x, vscale(c, w))
    pt = ChamberPoint(root_system=rs, coords=cs, vector=x, singular_set=singular)
    for i, a in enumerate(rs.simple_roots):
        expected_zero = (i in singular)
        if (pt.evaluate_root(a) == 0) != expected_zero:
            raise InvalidInputError("singular set inconsistent with realization (bug)")
    return pt
