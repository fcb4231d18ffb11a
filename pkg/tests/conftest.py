"""Cached builders shared across the test modules.

Everything in the package is pure and deterministic, so memoizing by the
construction arguments is safe and keeps the suite fast.
"""

from __future__ import annotations

from functools import lru_cache

from orbitope import (build_root_system, build_weyl_group, chamber_point,
                      classify_faces)


@lru_cache(maxsize=None)
def get_rs(type_label: str, rank: int):
    return build_root_system(type_label, rank)


@lru_cache(maxsize=None)
def get_group(type_label: str, rank: int):
    return build_weyl_group(get_rs(type_label, rank))


@lru_cache(maxsize=None)
def get_point(type_label: str, rank: int, coords: tuple):
    return chamber_point(get_rs(type_label, rank), coords)


@lru_cache(maxsize=None)
def get_classification(type_label: str, rank: int, coords: tuple):
    rs = get_rs(type_label, rank)
    return classify_faces(rs, get_group(type_label, rank),
                          get_point(type_label, rank, coords))
