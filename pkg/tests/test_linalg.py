"""Exact linear algebra helpers."""

from __future__ import annotations

import random
from fractions import Fraction as Q

import pytest

from orbitope.linalg import (dot, frac_str, gram_matrix, identity, inverse,
                             mat_mul, mat_vec, nullspace, primitive,
                             project_onto_span, rank, rref, solve,
                             row_space_basis, vec)


def test_rref_identity():
    red, pivots = rref(identity(3))
    assert red == identity(3)
    assert pivots == (0, 1, 2)


def test_solve_and_inverse_roundtrip():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 5)
        a = tuple(tuple(Q(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n))
                  for _ in range(n))
        if rank(a) < n:
            continue
        x = vec([rng.randint(-5, 5) for _ in range(n)])
        b = mat_vec(a, x)
        assert solve(a, b) == x
        assert mat_mul(a, inverse(a)) == identity(n)


def test_solve_rejects_inconsistent_and_underdetermined():
    with pytest.raises(ValueError):
        solve(((Q(1), Q(0)), (Q(1), Q(0))), (Q(0), Q(1)))
    with pytest.raises(ValueError):
        solve(((Q(1), Q(1)),), (Q(0),))


def test_nullspace_orthogonal_to_rows():
    rng = random.Random(11)
    for _ in range(25):
        rows = tuple(vec([rng.randint(-4, 4) for _ in range(5)]) for _ in range(3))
        ns = nullspace(rows)
        assert len(ns) == 5 - rank(rows)
        for v in ns:
            assert all(dot(r, v) == 0 for r in rows)


def test_row_space_basis_spans():
    rows = (vec([1, 2, 3]), vec([2, 4, 6]), vec([0, 1, 1]))
    basis = row_space_basis(rows)
    assert len(basis) == 2 == rank(rows)


def test_primitive_scaling():
    assert primitive(vec(["1/2", "-3/2", 0])) == (1, -3, 0)
    assert primitive(vec([4, 6])) == (2, 3)
    with pytest.raises(ValueError):
        primitive(vec([0, 0]))


def test_project_onto_span_is_idempotent_and_orthogonal():
    basis = [vec([1, 1, 0]), vec([0, 1, 1])]
    v = vec([3, 0, 1])
    p = project_onto_span(basis, v)
    assert project_onto_span(basis, p) == p
    for b in basis:
        assert dot(b, tuple(a - c for a, c in zip(v, p))) == 0


def test_gram_matrix_symmetric():
    vs = [vec([1, 2]), vec([0, 1])]
    g = gram_matrix(vs)
    assert g[0][1] == g[1][0]


def test_frac_str():
    assert frac_str(Q(3)) == "3"
    assert frac_str(Q(-5, 2)) == "-5/2"
