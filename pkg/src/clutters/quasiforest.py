"""Quasi-forests: leaves, leaf orders, and skeleton clutters with certificates.

A facet F is a leaf when some other facet G (a branch) absorbs every other
intersection with F: H&F <= G&F for all facets H != F.  A quasi-forest is
a complex whose facets can be ordered F_1..F_q so that each F_i is a leaf
of the subcomplex spanned by F_1..F_i; leaf orders are found by peeling
leaves off the end with backtracking.

The facets of the pure d-skeleton of a quasi-forest form a (d+1)-uniform
clutter that is decomposable: peeling a leaf F_r splits the clutter into
the skeleton clutter of the first r-1 facets and the complete clutter on
F_r, glued over the non-free part of F_r, which lies inside the branch and
is therefore a clique on both sides.  The certificate is built along the
leaf order exactly this way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ._bits import members, subsets_of_size
from .core import SimplicialComplex, UniformClutter, VertexSet, VertexSetLike, as_mask
from .decomposable import (
    CompleteLeaf,
    DecompCertificate,
    GluedUnion,
    check_certificate,
)


@dataclass(frozen=True)
class LeafVerdict:
    is_leaf: bool
    branch: Optional[VertexSet]

    def __bool__(self) -> bool:
        return self.is_leaf


def is_leaf(dd: SimplicialComplex, f: VertexSetLike) -> LeafVerdict:
    """Decide whether f is a leaf; return a branch as the witness."""
    fm = as_mask(dd.n, f)
    if fm not in set(dd.facets):
        raise ValueError(f"{members(fm)} is not a facet")
    others = [g for g in dd.facets if g != fm]
    if not others:
        return LeafVerdict(True, None)
    for g in others:
        gf = g & fm
        if all((h & fm) & ~gf == 0 for h in others):
            return LeafVerdict(True, VertexSet(dd.n, g))
    return LeafVerdict(False, None)


@dataclass(frozen=True)
class LeafOrder:
    n: int
    facets: tuple[int, ...]  # F_1..F_q; each F_i a leaf of <F_1..F_i>

    @property
    def facet_sets(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet(self.n, f) for f in self.facets)

    def __len__(self) -> int:
        return len(self.facets)


def _leaf_candidates(n: int, facets: tuple[int, ...]) -> list[int]:
    out = []
    for f in facets:
        others = [g for g in facets if g != f]
        if not others:
            out.append(f)
            continue
        for g in others:
            gf = g & f
            if all((h & f) & ~gf == 0 for h in others):
                out.append(f)
                break
    return out


def find_leaf_order(dd: SimplicialComplex) -> Optional[LeafOrder]:
    """Peel leaves off the end, backtracking over the choice of leaf.

    Greedy peeling is believed to suffice, but backtracking is kept so a
    verdict of "no leaf order" is a proof.
    """
    failed: set[tuple[int, ...]] = set()

    def peel(facets: tuple[int, ...]) -> Optional[list[int]]:
        if len(facets) <= 1:
            return list(facets)
        if facets in failed:
            return None
        for f in _leaf_candidates(dd.n, facets):
            rest = tuple(g for g in facets if g != f)
            head = peel(rest)
            if head is not None:
                return head + [f]
        failed.add(facets)
        return None

    order = peel(dd.facets)
    if order is None:
        return None
    return LeafOrder(dd.n, tuple(order))


def quasiforest_skeleton_clutter(
    dd: SimplicialComplex, d: int
) -> tuple[UniformClutter, DecompCertificate]:
    """The (d+1)-uniform clutter of d-faces of a quasi-forest, certified.

    Follows a leaf order: start from the complete clutter on F_1, then
    glue in the complete clutter on each further facet.  Facets with fewer
    than d+1 vertices contribute no circuits but keep their vertices in
    the tree, which is what makes the glue conditions uniform.
    """
    if d < 1:
        raise ValueError("skeleton dimension must be positive")
    order = find_leaf_order(dd)
    if order is None:
        raise ValueError("not a quasi-forest")
    uniform = d + 1

    circuits: set[int] = set()
    for f in dd.facets:
        circuits.update(subsets_of_size(f, uniform))
    clutter = UniformClutter(dd.n, uniform, tuple(circuits))

    if not order.facets:
        cert: DecompCertificate = CompleteLeaf(0)
        check_certificate(clutter, cert)
        return clutter, cert

    cert = CompleteLeaf(order.facets[0])
    for f in order.facets[1:]:
        cert = GluedUnion(cert, CompleteLeaf(f))
    check_certificate(clutter, cert)
    return clutter, cert
