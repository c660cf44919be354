"""Shellings, extendable shellability, and the skeleton/residual equivalence.

A facet order F_1..F_t of a pure complex is a shelling when each F_i meets
the complex generated by its predecessors in a non-empty union of maximal
proper faces of F_i.  Concretely: some predecessor intersects F_i in a
codimension-one face, and every predecessor's intersection with F_i lies
inside such a codimension-one intersection.  Whether a facet can extend a
partial shelling depends only on the SET of facets already placed, so
searches run over prefix sets (at most 2^facets states) instead of orders.

A complex is extendably shellable when every shelling of a subcomplex
spanned by some of its facets extends to a full shelling; equivalently,
every reachable proper prefix set admits an appendable facet.

The equivalence check ties two exhaustive computations together for the
complete d-uniform clutter on [n]: the complement map e <-> [n]-e matches
deletions of simplicial maximal subcircuits with shellable prefix
extensions of the (n-d)-skeleton of the full simplex, so the skeleton is
extendably shellable exactly when every residual of the complete clutter
under simplicial deletions is chordal.  Both sides are computed
independently here and compared.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional

from ._bits import members, size, sort_key, subsets_of_size
from .core import (
    SimplicialComplex,
    VertexSet,
    VertexSetLike,
    as_mask,
    complete_clutter,
    skeleton,
)


@dataclass(frozen=True)
class ShellingCheck:
    ok: bool
    fail_index: Optional[int]  # 0-based position of the offending facet

    def __bool__(self) -> bool:
        return self.ok


def _appendable(chosen: list[int], f: int) -> bool:
    """Can facet f extend a partial shelling with the given chosen set?"""
    if not chosen:
        return True
    joint = 0
    diffs = []
    for g in chosen:
        d = f & ~g
        diffs.append(d)
        if size(d) == 1:
            joint |= d
    if not joint:
        return False
    return all(d & joint for d in diffs)


def is_shelling_order(
    dd: SimplicialComplex, order: list[VertexSetLike]
) -> ShellingCheck:
    """Check a facet order for the shelling condition; first failure index."""
    masks = [as_mask(dd.n, f) for f in order]
    if sorted(masks, key=sort_key) != list(dd.facets):
        raise ValueError("not a permutation of the facets")
    if not dd.is_pure():
        warnings.warn("shelling checked on a non-pure complex", stacklevel=2)
    for i in range(1, len(masks)):
        if not _appendable(masks[:i], masks[i]):
            return ShellingCheck(False, i)
    return ShellingCheck(True, None)


@dataclass(frozen=True)
class ShellingPrefix:
    """A partial shelling; appendability depends only on the chosen set."""

    complex: SimplicialComplex
    chosen: tuple[int, ...] = ()

    @property
    def chosen_sets(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet(self.complex.n, f) for f in self.chosen)

    def appendable_facets(self) -> tuple[VertexSet, ...]:
        placed = set(self.chosen)
        out = []
        for f in self.complex.facets:
            if f not in placed and _appendable(list(self.chosen), f):
                out.append(VertexSet(self.complex.n, f))
        return tuple(out)

    def extend(self, f: VertexSetLike) -> "ShellingPrefix":
        m = as_mask(self.complex.n, f)
        if m in self.chosen or m not in set(self.complex.facets):
            raise ValueError("facet unavailable")
        if not _appendable(list(self.chosen), m):
            raise ValueError("facet not appendable")
        return ShellingPrefix(self.complex, self.chosen + (m,))


@dataclass(frozen=True)
class ShellingSearchResult:
    order: Optional[tuple[VertexSet, ...]]
    exhausted: bool
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.order is not None


def find_shelling(
    dd: SimplicialComplex, budget: int = 10**6
) -> ShellingSearchResult:
    """DFS over prefix sets for a full shelling order; memoizes dead sets."""
    if not dd.is_pure():
        warnings.warn("shelling search on a non-pure complex", stacklevel=2)
    facets = dd.facets
    m = len(facets)
    if m == 0:
        return ShellingSearchResult((), False, 0)
    failed: set[int] = set()
    nodes = 0

    def candidates(state: int, chosen: list[int]) -> list[int]:
        return [
            i
            for i in range(m)
            if not (state >> i) & 1 and _appendable(chosen, facets[i])
        ]

    chosen: list[int] = []
    stack = [(0, candidates(0, chosen), 0)]
    while stack:
        state, cands, pos = stack[-1]
        if pos >= len(cands):
            failed.add(state)
            stack.pop()
            if chosen:
                chosen.pop()
            continue
        stack[-1] = (state, cands, pos + 1)
        i = cands[pos]
        nodes += 1
        if nodes > budget:
            return ShellingSearchResult(None, True, nodes)
        child = state | (1 << i)
        if child in failed:
            continue
        chosen.append(facets[i])
        if len(chosen) == m:
            return ShellingSearchResult(
                tuple(VertexSet(dd.n, f) for f in chosen), False, nodes
            )
        stack.append((child, candidates(child, chosen), 0))
    return ShellingSearchResult(None, False, nodes)


@dataclass(frozen=True)
class ExtendabilityResult:
    status: str  # "extendable" | "obstructed" | "exhausted"
    stuck_order: Optional[tuple[VertexSet, ...]]
    states: int = 0

    def __bool__(self) -> bool:
        return self.status == "extendable"


#: Default cap on facet count for the prefix-set exploration (2^facets states).
EXTENDABILITY_FACET_BOUND = 20


def is_extendably_shellable(
    dd: SimplicialComplex,
    facet_bound: int = EXTENDABILITY_FACET_BOUND,
    state_budget: int = 10**7,
) -> ExtendabilityResult:
    """Explore every shellable prefix set; report a stuck one if any exists.

    A stuck reachable proper prefix set is returned as an explicit shelling
    order of that set (found by a nested search), which is then a shelling
    of a facet subcomplex that cannot be continued.
    """
    if not dd.is_pure():
        warnings.warn("extendability checked on a non-pure complex", stacklevel=2)
    facets = dd.facets
    m = len(facets)
    if m > facet_bound:
        raise ValueError(f"{m} facets exceed the configured bound {facet_bound}")
    if m <= 1:
        return ExtendabilityResult("extendable", None, m + 1)

    # appendability of facet i to state S:
    #   U = union of lack[a] over vertices a in f_i with some chosen g, f_i\g={a}
    #   appendable iff U nonzero and S subset of U
    single: list[dict[int, int]] = []  # per facet: vertex bit -> mask of g with f\g = {a}
    lack: dict[int, int] = {}  # vertex bit -> facets not containing it
    for i, f in enumerate(facets):
        for v in members(f):
            lack.setdefault(1 << (v - 1), 0)
    for a in lack:
        mask = 0
        for j, g in enumerate(facets):
            if not g & a:
                mask |= 1 << j
        lack[a] = mask
    for i, f in enumerate(facets):
        table: dict[int, int] = {}
        for j, g in enumerate(facets):
            if i == j:
                continue
            d = f & ~g
            if size(d) == 1:
                table[d] = table.get(d, 0) | (1 << j)
        single.append(table)

    full = (1 << m) - 1
    frontier = {0}
    seen = {0}
    states = 0
    while frontier:
        next_frontier: set[int] = set()
        for state in frontier:
            states += 1
            if states > state_budget:
                return ExtendabilityResult("exhausted", None, states)
            if state == full:
                continue
            found_any = False
            for i in range(m):
                bit_i = 1 << i
                if state & bit_i:
                    continue
                if state == 0:
                    ok = True
                else:
                    u = 0
                    for a, mask in single[i].items():
                        if state & mask:
                            u |= lack[a]
                    ok = bool(u) and state & ~u == 0
                if ok:
                    found_any = True
                    child = state | bit_i
                    if child not in seen:
                        seen.add(child)
                        next_frontier.add(child)
            if not found_any:
                order = _order_for_prefix_set(facets, state)
                return ExtendabilityResult(
                    "obstructed",
                    tuple(VertexSet(dd.n, f) for f in order),
                    states,
                )
        frontier = next_frontier
    return ExtendabilityResult("extendable", None, states)


def _order_for_prefix_set(facets: tuple[int, ...], state: int) -> list[int]:
    """A shelling order of the facets selected by ``state`` (which must be
    a reachable prefix set, so an order exists)."""
    chosen: list[int] = []
    remaining = [facets[i] for i in range(len(facets)) if (state >> i) & 1]
    failed: set[frozenset[int]] = set()

    def dfs(rest: list[int]) -> bool:
        if not rest:
            return True
        key = frozenset(rest)
        if key in failed:
            return False
        for f in list(rest):
            if _appendable(chosen, f):
                chosen.append(f)
                rest2 = [g for g in rest if g != f]
                if dfs(rest2):
                    return True
                chosen.pop()
        failed.add(key)
        return False

    if not dfs(remaining):
        raise RuntimeError("prefix set has no shelling order; this is a bug")
    return chosen


# ---------------------------------------------------------------------------
# equivalence between skeleton extendability and residual chordality


@dataclass(frozen=True)
class SimonReport:
    n: int
    d: int
    skeleton_extendably_shellable: bool
    num_residual_states: int
    all_residuals_chordal: bool
    equivalence_holds: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "skeleton_extendably_shellable": self.skeleton_extendably_shellable,
            "num_residual_states": self.num_residual_states,
            "all_residuals_chordal": self.all_residuals_chordal,
            "equivalence_holds": self.equivalence_holds,
        }


def _residual_states_all_chordal(n: int, d: int) -> tuple[int, bool]:
    """Explore all residuals of the complete clutter under deletions of
    simplicial maximal subcircuits; count them and decide whether each can
    be emptied (every deletion edge stays inside the explored graph, so
    chordality of a residual is backward reachability from the empty one).
    """
    base = complete_clutter(n, d)
    circuits = base.circuits
    m = len(circuits)
    index = {c: i for i, c in enumerate(circuits)}
    full_vertices = (1 << n) - 1
    elements = list(subsets_of_size(full_vertices, d - 1))
    contain = []
    for e in elements:
        mask = 0
        for i, c in enumerate(circuits):
            if e & ~c == 0:
                mask |= 1 << i
        contain.append(mask)

    clique_need: dict[int, int] = {}

    def need(nb: int) -> int:
        got = clique_need.get(nb)
        if got is None:
            got = 0
            for s in subsets_of_size(nb, d):
                got |= 1 << index[s]
            clique_need[nb] = got
        return got

    full_state = (1 << m) - 1
    edges: dict[int, list[int]] = {}
    stack = [full_state]
    seen = {full_state}
    while stack:
        state = stack.pop()
        children = []
        for e, cont in zip(elements, contain):
            present = cont & state
            if not present:
                continue  # not a maximal subcircuit of the residual
            nb = e
            rest = present
            while rest:
                low = rest & -rest
                nb |= circuits[low.bit_length() - 1]
                rest ^= low
            if need(nb) & ~state:
                continue  # neighborhood is not a clique in the residual
            child = state & ~cont
            children.append(child)
            if child not in seen:
                seen.add(child)
                stack.append(child)
        edges[state] = children

    # backward reachability from the empty residual
    emptiable = {0} if 0 in seen else set()
    changed = True
    while changed:
        changed = False
        for state, children in edges.items():
            if state not in emptiable and any(c in emptiable for c in children):
                emptiable.add(state)
                changed = True
    return len(seen), all(s in emptiable for s in seen)


def simon_equivalence_check(n: int, d: int) -> SimonReport:
    """Exhaustively verify, for the complete d-uniform clutter on [n], that
    the (n-d)-skeleton of the full simplex is extendably shellable exactly
    when every simplicial-deletion residual is chordal.

    Both sides are computed independently: the skeleton by prefix-set
    exploration, the residuals by deletion-state exploration.
    """
    if not (2 <= d <= n):
        raise ValueError("need 2 <= d <= n")
    skel = skeleton(SimplicialComplex.simplex(n), n - d)
    ext = is_extendably_shellable(skel)
    if ext.status == "exhausted":
        raise RuntimeError("extendability exploration exhausted its budget")
    num_states, all_chordal = _residual_states_all_chordal(n, d)
    return SimonReport(
        n=n,
        d=d,
        skeleton_extendably_shellable=(ext.status == "extendable"),
        num_residual_states=num_states,
        all_residuals_chordal=all_chordal,
        equivalence_holds=(ext.status == "extendable") == all_chordal,
    )
