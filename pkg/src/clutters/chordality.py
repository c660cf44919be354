"""Simplicial elements, simplicial sequences, chordality, simplicial subclutters.

For a d-uniform clutter C and a (d-1)-set e, the closed neighborhood
N[e] = e + {v : e+v is a circuit}.  e is a *maximal subcircuit* when some
circuit contains it (N[e] != e), and *simplicial* when N[e] is a clique.
A (d-1)-set contained in no circuit is vacuously simplicial.  Deleting e
removes every circuit containing e.

C is *chordal* when it can be emptied by repeatedly deleting an element
that is both a maximal subcircuit and simplicial.  The search for such an
order branches over candidates; since the result of a deletion depends
only on which circuits remain, failed residuals are memoized by their
circuit set and the search is exact.

A subclutter D of C is a *simplicial subclutter* when C can be thinned to
D in steps, each step removing a set A of circuits through a currently
simplicial element e.  Deleting circuits through e keeps e simplicial, so
a step (e, A) factors into |A| single-circuit steps with the same e; the
search therefore walks single-circuit removals, which is complete, and
regroups consecutive steps sharing e when reporting a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ._bits import members, size, sort_key, subsets_of_size
from .core import UniformClutter, VertexSet, VertexSetLike, as_mask, is_clique


class SimplicialityError(ValueError):
    """A sequence or step list failed its simpliciality side conditions."""

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class SimplicialSequence:
    """An ordered tuple of (d-1)-sets, validated against a base clutter."""

    n: int
    elements: tuple[int, ...]

    @classmethod
    def of(cls, n: int, elements: Iterable[VertexSetLike]) -> "SimplicialSequence":
        return cls(n, tuple(as_mask(n, e) for e in elements))

    @property
    def element_sets(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet(self.n, e) for e in self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SubclutterSteps:
    """Steps (e_i, A_i): delete the circuits A_i, all containing e_i."""

    n: int
    steps: tuple[tuple[int, tuple[int, ...]], ...]

    @classmethod
    def of(
        cls, n: int, steps: Iterable[tuple[VertexSetLike, Iterable[VertexSetLike]]]
    ) -> "SubclutterSteps":
        packed = []
        for e, aa in steps:
            packed.append(
                (as_mask(n, e), tuple(sorted((as_mask(n, f) for f in aa), key=sort_key)))
            )
        return cls(n, tuple(packed))

    def __len__(self) -> int:
        return len(self.steps)


# ---------------------------------------------------------------------------
# neighborhoods and deletion


def _check_subcircuit_size(c: UniformClutter, e: int) -> None:
    if size(e) != c.d - 1:
        raise ValueError(f"not a (d-1)-set: {members(e)} in a {c.d}-uniform clutter")


def closed_neighborhood(c: UniformClutter, e: VertexSetLike) -> VertexSet:
    m = as_mask(c.n, e)
    _check_subcircuit_size(c, m)
    out = m
    for f in c.circuits:
        if m & ~f == 0:
            out |= f
    return VertexSet(c.n, out)


def is_maximal_subcircuit(c: UniformClutter, e: VertexSetLike) -> bool:
    m = as_mask(c.n, e)
    _check_subcircuit_size(c, m)
    return any(m & ~f == 0 for f in c.circuits)


def maximal_subcircuits(c: UniformClutter) -> tuple[VertexSet, ...]:
    """All (d-1)-sets contained in some circuit, canonical order."""
    out: set[int] = set()
    for f in c.circuits:
        out.update(subsets_of_size(f, c.d - 1))
    return tuple(VertexSet(c.n, e) for e in sorted(out, key=sort_key))


def is_simplicial(c: UniformClutter, e: VertexSetLike) -> bool:
    """True iff the closed neighborhood of e is a clique."""
    return is_clique(c, closed_neighborhood(c, e))


def simplicial_elements(c: UniformClutter) -> tuple[VertexSet, ...]:
    """Simplicial maximal subcircuits of c, canonical order."""
    return tuple(e for e in maximal_subcircuits(c) if is_simplicial(c, e))


def delete(c: UniformClutter, e: VertexSetLike) -> UniformClutter:
    """Remove every circuit containing e."""
    m = as_mask(c.n, e)
    if size(m) > c.d:
        raise ValueError("deletion set larger than the uniformity")
    return c.replace_circuits(f for f in c.circuits if m & ~f != 0)


def validate_simplicial_sequence(
    c: UniformClutter, seq: SimplicialSequence
) -> UniformClutter:
    """Check each element simplicial over the running residual; return it.

    Elements need not be maximal subcircuits: an element contained in no
    remaining circuit is vacuously simplicial and deletes nothing.
    """
    residual = c
    for i, e in enumerate(seq.elements):
        _check_subcircuit_size(c, e)
        if not is_simplicial(residual, VertexSet(c.n, e)):
            raise SimplicialityError(
                i, f"element at index {i} ({members(e)}) is not simplicial over the residual"
            )
        residual = delete(residual, VertexSet(c.n, e))
    return residual


# ---------------------------------------------------------------------------
# chordality


@dataclass(frozen=True)
class ChordalityResult:
    status: str  # "chordal" | "not_chordal" | "inconclusive"
    order: Optional[SimplicialSequence]
    nodes: int = 0
    memo_hits: int = 0

    def __bool__(self) -> bool:
        return self.status == "chordal"


def _raw_simplicial_candidates(
    n: int, d: int, circuits: tuple[int, ...]
) -> list[int]:
    """Simplicial maximal subcircuits of a raw residual, canonical order."""
    circuit_set = frozenset(circuits)
    cands: set[int] = set()
    for f in circuits:
        cands.update(subsets_of_size(f, d - 1))
    out = []
    for e in sorted(cands, key=sort_key):
        nb = e
        for f in circuits:
            if e & ~f == 0:
                nb |= f
        if size(nb) < d or all(
            s in circuit_set for s in subsets_of_size(nb, d)
        ):
            out.append(e)
    return out


def is_chordal(
    c: UniformClutter,
    mode: str = "complete-search",
    budget: Optional[int] = None,
) -> ChordalityResult:
    """Decide chordality; return a simplicial order when one exists.

    ``complete-search`` backtracks over every simplicial maximal subcircuit
    at each step and memoizes refuted residuals, so "not_chordal" is a
    proof.  ``greedy`` always deletes the canonically first candidate; it
    cannot refute, so a stuck greedy run reports "inconclusive".
    """
    if mode not in ("complete-search", "greedy"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "greedy":
        residual = c.circuits
        order: list[int] = []
        nodes = 0
        while residual:
            nodes += 1
            cands = _raw_simplicial_candidates(c.n, c.d, residual)
            if not cands:
                return ChordalityResult("inconclusive", None, nodes)
            e = cands[0]
            order.append(e)
            residual = tuple(f for f in residual if e & ~f != 0)
        return ChordalityResult("chordal", SimplicialSequence(c.n, tuple(order)), nodes)

    failed: set[tuple[int, ...]] = set()
    nodes = 0
    memo_hits = 0

    # Iterative DFS; each frame carries its candidate list and a cursor.
    start = c.circuits
    if not start:
        return ChordalityResult("chordal", SimplicialSequence(c.n, ()))
    stack: list[tuple[tuple[int, ...], list[int], int]] = [
        (start, _raw_simplicial_candidates(c.n, c.d, start), 0)
    ]
    chosen: list[int] = []
    while stack:
        residual, cands, pos = stack[-1]
        if pos >= len(cands):
            failed.add(residual)
            stack.pop()
            if chosen:
                chosen.pop()
            continue
        stack[-1] = (residual, cands, pos + 1)
        e = cands[pos]
        child = tuple(f for f in residual if e & ~f != 0)
        nodes += 1
        if budget is not None and nodes > budget:
            return ChordalityResult("inconclusive", None, nodes, memo_hits)
        if child in failed:
            memo_hits += 1
            continue
        chosen.append(e)
        if not child:
            return ChordalityResult(
                "chordal", SimplicialSequence(c.n, tuple(chosen)), nodes, memo_hits
            )
        stack.append((child, _raw_simplicial_candidates(c.n, c.d, child), 0))
    return ChordalityResult("not_chordal", None, nodes, memo_hits)


# ---------------------------------------------------------------------------
# simplicial subclutters


def apply_subclutter_steps(c: UniformClutter, steps: SubclutterSteps) -> UniformClutter:
    """Validate and apply steps (e_i, A_i), returning the thinned clutter.

    Conditions checked at step i, against the running residual R:
    e_i is simplicial over R; every member of A_i is a circuit of R that
    contains e_i.  Empty A_i is allowed and deletes nothing.
    """
    if steps.n != c.n:
        raise ValueError("steps live on a different universe")
    residual = c
    for i, (e, aa) in enumerate(steps.steps):
        _check_subcircuit_size(c, e)
        if not is_simplicial(residual, VertexSet(c.n, e)):
            raise SimplicialityError(i, f"step {i}: e={members(e)} not simplicial")
        circuit_set = residual.circuit_set
        for f in aa:
            if e & ~f != 0:
                raise SimplicialityError(
                    i, f"step {i}: A contains circuit {members(f)} not containing e"
                )
            if f not in circuit_set:
                raise SimplicialityError(
                    i, f"step {i}: circuit {members(f)} not in the residual"
                )
        removed = set(aa)
        residual = residual.replace_circuits(
            f for f in residual.circuits if f not in removed
        )
    return residual


@dataclass(frozen=True)
class SubclutterSearchResult:
    steps: Optional[SubclutterSteps]
    exhausted: bool
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.steps is not None


def normalize_steps(steps: SubclutterSteps) -> SubclutterSteps:
    """Drop empty steps and merge consecutive steps sharing the same e."""
    out: list[tuple[int, tuple[int, ...]]] = []
    for e, aa in steps.steps:
        if not aa:
            continue
        if out and out[-1][0] == e:
            merged = tuple(sorted(out[-1][1] + aa, key=sort_key))
            out[-1] = (e, merged)
        else:
            out.append((e, aa))
    return SubclutterSteps(steps.n, tuple(out))


def is_simplicial_subclutter(
    c: UniformClutter, d: UniformClutter, budget: int = 10**6
) -> SubclutterSearchResult:
    """Search for steps witnessing that ``d`` is a simplicial subclutter of ``c``.

    Works down from c by removing one circuit at a time: removing F from R
    is admissible when some (d-1)-subset of F is simplicial over R.  Failed
    residuals are memoized, so an unexhausted empty search is a proof of
    non-existence; hitting the node budget is reported separately.
    """
    if d.n != c.n or d.d != c.d:
        raise ValueError("not a subclutter: different universe or uniformity")
    c_set = c.circuit_set
    if not set(d.circuits) <= c_set:
        raise ValueError("not a subclutter")
    if d.circuit_set == c_set:
        raise ValueError("proper subclutter required")

    target = d.circuit_set
    failed: set[tuple[int, ...]] = set()
    nodes = 0
    exhausted = False

    def admissible_removals(residual: tuple[int, ...]) -> list[tuple[int, int]]:
        out = []
        for f in residual:
            if f in target:
                continue
            for e in subsets_of_size(f, c.d - 1):
                nb = e
                for g in residual:
                    if e & ~g == 0:
                        nb |= g
                circuit_set = frozenset(residual)
                if size(nb) < c.d or all(
                    s in circuit_set for s in subsets_of_size(nb, c.d)
                ):
                    out.append((f, e))
                    break
        return out

    start = c.circuits
    stack: list[tuple[tuple[int, ...], list[tuple[int, int]], int]] = [
        (start, admissible_removals(start), 0)
    ]
    trail: list[tuple[int, int]] = []  # (e, removed circuit)
    while stack:
        residual, cands, pos = stack[-1]
        if pos >= len(cands):
            failed.add(residual)
            stack.pop()
            if trail:
                trail.pop()
            continue
        stack[-1] = (residual, cands, pos + 1)
        f, e = cands[pos]
        nodes += 1
        if nodes > budget:
            exhausted = True
            break
        child = tuple(g for g in residual if g != f)
        if child in failed:
            continue
        trail.append((e, f))
        if frozenset(child) == target:
            raw = SubclutterSteps(c.n, tuple((e, (f,)) for e, f in trail))
            return SubclutterSearchResult(normalize_steps(raw), False, nodes)
        stack.append((child, admissible_removals(child), 0))
    return SubclutterSearchResult(None, exhausted, nodes)
