"""Ground-set combinatorics: vertex sets, uniform clutters, simplicial complexes.

Vertices are the integers 1..n.  Vertex sets are dense bitmasks over a fixed
universe, so membership, union, intersection, difference and complement are
exact word operations.  Everything here is immutable and safe to share.

Conventions that matter downstream:

* A d-uniform clutter is a set of d-element circuits.  Distinct d-sets are
  automatically incomparable, but construction still rejects duplicates and
  wrong sizes.  Circuits are kept sorted lexicographically by sorted vertex
  list, so all derived output is reproducible.
* The complete d-uniform clutter on fewer than d vertices has no circuits;
  the universe is retained as bookkeeping ("isolated points").  Those
  vertices still count as cliques, hence as faces of the clique complex.
* A simplicial complex is stored by its facet antichain.  The void complex
  (no facets, no faces) is distinct from the complex whose single face is
  the empty set.  Both occur as Alexander duals of ordinary complexes:
  the dual of the full simplex is void, and duality is an involution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from . import _bits
from ._bits import bit, mask_of, members, size, sort_key, subsets_of_size

#: Largest supported universe.  Masks are arbitrary-precision ints, so this
#: is a sanity bound rather than a hard word width; raise it if you need to.
MAX_UNIVERSE = 64

VertexSetLike = Union["VertexSet", Iterable[int]]


def _check_universe(n: int) -> None:
    if n < 0:
        raise ValueError(f"universe size must be non-negative, got {n}")
    if n > MAX_UNIVERSE:
        raise ValueError(f"universe size {n} exceeds MAX_UNIVERSE={MAX_UNIVERSE}")


@dataclass(frozen=True, order=False)
class VertexSet:
    """A subset of the universe {1..n}, stored as a bitmask."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        _check_universe(self.n)
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"members out of range 1..{self.n}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int] = ()) -> "VertexSet":
        return cls(n, mask_of(vertices))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return members(self.mask)

    def __len__(self) -> int:
        return size(self.mask)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, vertex: int) -> bool:
        return 1 <= vertex <= self.n and bool(self.mask >> (vertex - 1) & 1)

    def _coerce(self, other: VertexSetLike) -> int:
        if isinstance(other, VertexSet):
            if other.n != self.n:
                raise ValueError("vertex sets live on different universes")
            return other.mask
        return mask_of(other)

    def union(self, other: VertexSetLike) -> "VertexSet":
        return VertexSet(self.n, self.mask | self._coerce(other))

    def intersection(self, other: VertexSetLike) -> "VertexSet":
        return VertexSet(self.n, self.mask & self._coerce(other))

    def difference(self, other: VertexSetLike) -> "VertexSet":
        return VertexSet(self.n, self.mask & ~self._coerce(other))

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def issubset(self, other: VertexSetLike) -> bool:
        o = self._coerce(other)
        return self.mask & ~o == 0

    def __or__(self, other: VertexSetLike) -> "VertexSet":
        return self.union(other)

    def __and__(self, other: VertexSetLike) -> "VertexSet":
        return self.intersection(other)

    def __sub__(self, other: VertexSetLike) -> "VertexSet":
        return self.difference(other)

    def __le__(self, other: VertexSetLike) -> bool:
        return self.issubset(other)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


def as_mask(n: int, s: VertexSetLike) -> int:
    """Normalize a VertexSet or an iterable of vertices to a mask over [n]."""
    if isinstance(s, VertexSet):
        if s.n != n:
            raise ValueError("vertex set lives on a different universe")
        return s.mask
    m = mask_of(s)
    if m >> n:
        raise ValueError(f"members out of range 1..{n}")
    return m


@dataclass(frozen=True)
class UniformClutter:
    """A d-uniform clutter: a set of d-element circuits on the universe [n].

    ``circuits`` is the canonically sorted tuple of circuit masks.  The
    antichain property is automatic for equal-sized sets; duplicates and
    size violations are rejected at construction.
    """

    n: int
    d: int
    circuits: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_universe(self.n)
        if self.d < 1:
            raise ValueError(f"circuit size must be positive, got {self.d}")
        seen = set()
        for c in self.circuits:
            if c < 0 or c >> self.n:
                raise ValueError(f"circuit out of range 1..{self.n}")
            if size(c) != self.d:
                raise ValueError(
                    f"circuit {members(c)} has {size(c)} vertices, expected {self.d}"
                )
            if c in seen:
                raise ValueError(f"duplicate circuit {members(c)}")
            seen.add(c)
        canonical = tuple(sorted(seen, key=sort_key))
        if canonical != self.circuits:
            object.__setattr__(self, "circuits", canonical)

    @classmethod
    def of(cls, n: int, d: int, circuits: Iterable[VertexSetLike]) -> "UniformClutter":
        return cls(n, d, tuple(as_mask(n, c) for c in circuits))

    def __len__(self) -> int:
        return len(self.circuits)

    def __contains__(self, circuit: VertexSetLike) -> bool:
        return as_mask(self.n, circuit) in self.circuit_set

    @property
    def circuit_set(self) -> frozenset[int]:
        return frozenset(self.circuits)

    @property
    def circuit_sets(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet(self.n, c) for c in self.circuits)

    @property
    def support(self) -> VertexSet:
        m = 0
        for c in self.circuits:
            m |= c
        return VertexSet(self.n, m)

    def is_empty(self) -> bool:
        return not self.circuits

    def replace_circuits(self, circuits: Iterable[int]) -> "UniformClutter":
        return UniformClutter(self.n, self.d, tuple(circuits))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facet antichain on the universe [n].

    Facets are canonically sorted masks.  ``facets == ()`` is the void
    complex with no faces at all; ``facets == (0,)`` is the complex whose
    single face is the empty set.
    """

    n: int
    facets: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_universe(self.n)
        uniq = set()
        for f in self.facets:
            if f < 0 or f >> self.n:
                raise ValueError(f"facet out of range 1..{self.n}")
            uniq.add(f)
        for f in uniq:
            for g in uniq:
                if f != g and f & ~g == 0:
                    raise ValueError(
                        f"facet {members(f)} is contained in facet {members(g)}"
                    )
        canonical = tuple(sorted(uniq, key=sort_key))
        if canonical != self.facets:
            object.__setattr__(self, "facets", canonical)

    @classmethod
    def of(cls, n: int, facets: Iterable[VertexSetLike]) -> "SimplicialComplex":
        return cls(n, tuple(as_mask(n, f) for f in facets))

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        """The full simplex on [n]."""
        return cls(n, ((1 << n) - 1,))

    @property
    def facet_sets(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet(self.n, f) for f in self.facets)

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension, or -1 for {0} and -2 for the void complex."""
        if not self.facets:
            return -2
        return max(size(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        sizes = {size(f) for f in self.facets}
        return len(sizes) <= 1

    def contains_face(self, face: VertexSetLike) -> bool:
        m = as_mask(self.n, face)
        return any(m & ~f == 0 for f in self.facets)

    def faces(self) -> Iterator[VertexSet]:
        """All faces, on demand, in canonical order (grouped by dimension)."""
        seen: set[int] = set()
        for f in self.facets:
            for s in _bits.submasks(f):
                seen.add(s)
        for m in sorted(seen, key=lambda s: (size(s), sort_key(s))):
            yield VertexSet(self.n, m)

    def f_vector(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        seen: set[int] = set()
        for f in self.facets:
            for s in _bits.submasks(f):
                if s not in seen:
                    seen.add(s)
                    counts[size(s)] = counts.get(size(s), 0) + 1
        top = max(counts) if counts else 0
        return tuple(counts.get(k, 0) for k in range(top + 1))


# ---------------------------------------------------------------------------
# clutter operations


def complete_clutter(n: int, d: int) -> UniformClutter:
    """All d-subsets of [n]; no circuits when n < d (universe retained)."""
    _check_universe(n)
    if d < 1:
        raise ValueError(f"circuit size must be positive, got {d}")
    if n < d:
        return UniformClutter(n, d, ())
    full = (1 << n) - 1
    return UniformClutter(n, d, tuple(subsets_of_size(full, d)))


def complete_clutter_on(n: int, d: int, vertices: VertexSetLike) -> UniformClutter:
    """The complete d-uniform clutter on a subset of [n], as a clutter on [n]."""
    m = as_mask(n, vertices)
    return UniformClutter(n, d, tuple(subsets_of_size(m, d)) if size(m) >= d else ())


def complement_clutter(c: UniformClutter) -> UniformClutter:
    """All d-subsets of [n] that are not circuits of ``c``."""
    present = c.circuit_set
    return UniformClutter(
        c.n,
        c.d,
        tuple(s for s in subsets_of_size((1 << c.n) - 1, c.d) if s not in present),
    )


def induced_subclutter(c: UniformClutter, w: VertexSetLike) -> UniformClutter:
    """Circuits contained in ``w``; universe bookkeeping kept at n."""
    m = as_mask(c.n, w)
    return UniformClutter(c.n, c.d, tuple(f for f in c.circuits if f & ~m == 0))


def is_clique(c: UniformClutter, f: VertexSetLike) -> bool:
    """True iff |f| < d or every d-subset of ``f`` is a circuit."""
    m = as_mask(c.n, f)
    if size(m) < c.d:
        return True
    present = c.circuit_set
    return all(s in present for s in subsets_of_size(m, c.d))


def _is_clique_mask(circuit_set: frozenset[int], d: int, m: int) -> bool:
    if size(m) < d:
        return True
    return all(s in circuit_set for s in subsets_of_size(m, d))


def clique_complex(c: UniformClutter) -> SimplicialComplex:
    """The complex whose faces are the cliques of ``c``, returned by facets.

    Cliques of size >= d are grown level by level from the circuits: a
    (k+1)-set is a clique iff dropping any vertex leaves a clique and the
    d-subsets through the new vertex are circuits; checking all d-subsets
    directly keeps this simple and exact.  Maximal cliques of size d-1 are
    the (d-1)-sets contained in no circuit.
    """
    n, d = c.n, c.d
    if n < d:
        return SimplicialComplex.simplex(n)
    present = c.circuit_set
    full = (1 << n) - 1

    level = set(c.circuits)
    maximal: list[int] = []
    while level:
        nxt: set[int] = set()
        for q in level:
            extendable = False
            for v in members(full & ~q):
                cand = q | bit(v)
                if cand in nxt:
                    extendable = True
                    continue
                if _is_clique_mask(present, d, cand):
                    nxt.add(cand)
                    extendable = True
            if not extendable:
                maximal.append(q)
        level = nxt

    # (d-1)-sets in no circuit are maximal cliques; smaller sets never are,
    # except when the whole universe is smaller than d (handled above).
    for e in subsets_of_size(full, d - 1):
        if not any(e & ~q == 0 for q in c.circuits):
            maximal.append(e)
    return SimplicialComplex(n, tuple(maximal))


# ---------------------------------------------------------------------------
# complex operations


def skeleton(dd: SimplicialComplex, i: int) -> SimplicialComplex:
    """All faces of dimension <= i (facets may end up below dimension i)."""
    if i < 0:
        raise ValueError("skeleton dimension must be non-negative")
    out: set[int] = set()
    for f in dd.facets:
        if size(f) <= i + 1:
            out.add(f)
        else:
            out.update(subsets_of_size(f, i + 1))
    # drop faces contained in others
    keep = [f for f in out if not any(f != g and f & ~g == 0 for g in out)]
    return SimplicialComplex(dd.n, tuple(keep))


def pure_skeleton(dd: SimplicialComplex, i: int) -> SimplicialComplex:
    """The complex whose facets are exactly the i-faces."""
    if i < 0:
        raise ValueError("skeleton dimension must be non-negative")
    out: set[int] = set()
    for f in dd.facets:
        if size(f) >= i + 1:
            out.update(subsets_of_size(f, i + 1))
    return SimplicialComplex(dd.n, tuple(out))


def minimal_nonfaces(dd: SimplicialComplex) -> tuple[VertexSet, ...]:
    """Inclusion-minimal subsets of [n] that are not faces, canonical order.

    A set is a minimal non-face iff it is not a face but every child
    obtained by dropping one vertex is.  Enumeration over all subsets is
    exact and fine for the supported universe sizes.
    """
    n = dd.n
    facets = dd.facets
    full = (1 << n) - 1

    def is_face(m: int) -> bool:
        return any(m & ~f == 0 for f in facets)

    out: list[int] = []
    for k in range(0, n + 1):
        for m in subsets_of_size(full, k):
            if is_face(m):
                continue
            ok = True
            for v in members(m):
                if not is_face(m & ~bit(v)):
                    ok = False
                    break
            if ok:
                out.append(m)
    out.sort(key=sort_key)
    return tuple(VertexSet(n, m) for m in out)


def alexander_dual(dd: SimplicialComplex) -> SimplicialComplex:
    """Facets of the dual are complements of the minimal non-faces."""
    full = (1 << dd.n) - 1
    return SimplicialComplex(
        dd.n, tuple(full & ~v.mask for v in minimal_nonfaces(dd))
    )


def stanley_reisner_circuits(c: UniformClutter) -> UniformClutter:
    """Minimal non-faces of the clique complex, i.e. the complement clutter.

    Every minimal non-face of a clique complex has exactly d vertices: sets
    smaller than d are cliques outright, and a set larger than d whose
    proper subsets are all cliques has every d-subset inside some proper
    subset, hence is itself a clique.
    """
    return complement_clutter(c)
