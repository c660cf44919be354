"""Bitmask helpers for vertex sets over a fixed universe.

Vertices are the integers 1..n; vertex i occupies bit i-1.  All higher-level
code stores sets as plain ints and converts to sorted tuples only at the
boundary, so set algebra stays exact and cheap.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


def bit(vertex: int) -> int:
    return 1 << (vertex - 1)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def members(mask: int) -> tuple[int, ...]:
    """Sorted 1-based members of a mask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def size(mask: int) -> int:
    return mask.bit_count()


def subsets_of_size(mask: int, k: int) -> Iterator[int]:
    """All k-element submasks of ``mask``, in canonical order."""
    for combo in combinations(members(mask), k):
        yield mask_of(combo)


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (descending numeric order), empty set included."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def sort_key(mask: int) -> tuple[int, ...]:
    """Canonical key: the sorted vertex list, compared lexicographically."""
    return members(mask)
