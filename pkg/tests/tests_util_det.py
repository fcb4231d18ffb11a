"""Tiny exact determinant by cofactor expansion, for test oracles only."""

from __future__ import annotations


def det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det([[row[k] for k in range(len(m)) if k != j]
                                          for row in m[1:]])
               for j in range(len(m)))
