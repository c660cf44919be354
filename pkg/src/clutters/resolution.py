"""Exact graded Betti numbers, regularity, and linear-resolution checks.

All linear algebra is exact: ranks are computed by Gaussian elimination
over the rationals (fractions) or over a prime field.  No floating point.

Betti numbers of a monomial ideal are computed multidegree by multidegree
over the lcm lattice of the minimal generators: for a lattice degree b,
the faces tau of the Koszul subcomplex are the squarefree tau <= b with
x^(b-tau) in I, and beta_{i,b} is the reduced homology rank of that
complex in dimension i-1.  A second, independently derived method reads
the same numbers off the multidegree strands of the Taylor complex; the
two are cross-checked in the test suite, and only degrees in the lcm
lattice can contribute.

Regularity is max(j - i) over nonzero beta_{i,j}; an equigenerated ideal
in degree d has a d-linear resolution iff that maximum equals d.  The
zero ideal is vacuously linear and its regularity is reported as None.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from ._bits import members, size, submasks
from .core import SimplicialComplex
from .ideals import Monomial, OrderedIdeal, minimal_generators

FIELDS = ("Q", "F2", "F3")


def _field_prime(field: str) -> Optional[int]:
    if field == "Q":
        return None
    if field.startswith("F") and field[1:].isdigit():
        p = int(field[1:])
        if p >= 2:
            return p
    raise ValueError(f"unknown field {field!r}; use 'Q' or 'F<p>'")


def matrix_rank(rows: Sequence[Sequence[int]], field: str = "Q") -> int:
    """Exact rank by Gaussian elimination over Q or F_p."""
    p = _field_prime(field)
    if not rows or not rows[0]:
        return 0
    if p is None:
        work = [[Fraction(x) for x in row] for row in rows]
    else:
        work = [[x % p for x in row] for row in rows]
    ncols = len(work[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(work)):
            if work[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        inv = (
            1 / work[row][col] if p is None else pow(int(work[row][col]), p - 2, p)
        )
        prow = work[row]
        for r in range(row + 1, len(work)):
            factor = work[r][col]
            if not factor:
                continue
            scale = factor * inv if p is None else (factor * inv) % p
            if p is None:
                work[r] = [a - scale * b for a, b in zip(work[r], prow)]
            else:
                work[r] = [(a - scale * b) % p for a, b in zip(work[r], prow)]
        rank += 1
        row += 1
        if row == len(work):
            break
    return rank


def _homology_of_faces(faces: Iterable[int], field: str) -> dict[int, int]:
    """Reduced homology ranks of a simplicial complex given as face masks.

    The empty face participates as the single (-1)-cell, so the ranks are
    reduced; the void complex (no faces at all) has all ranks zero.
    """
    by_dim: dict[int, list[int]] = {}
    for f in set(faces):
        by_dim.setdefault(size(f) - 1, []).append(f)
    if not by_dim:
        return {}
    for lst in by_dim.values():
        lst.sort()
    top = max(by_dim)

    index: dict[int, dict[int, int]] = {
        dim: {f: i for i, f in enumerate(lst)} for dim, lst in by_dim.items()
    }

    def boundary(dim: int) -> list[list[int]]:
        """Matrix of d_dim : C_dim -> C_(dim-1); rows are targets."""
        sources = by_dim.get(dim, [])
        targets = by_dim.get(dim - 1, [])
        if not sources or not targets:
            return []
        rows = [[0] * len(sources) for _ in targets]
        tindex = index[dim - 1]
        for j, f in enumerate(sources):
            verts = members(f)
            for pos, v in enumerate(verts):
                sub = f & ~(1 << (v - 1))
                i = tindex[sub]
                rows[i][j] += -1 if pos % 2 else 1
        return rows

    ranks = {dim: matrix_rank(boundary(dim), field) for dim in range(top + 1)}
    out: dict[int, int] = {}
    for dim in range(-1, top + 1):
        cells = len(by_dim.get(dim, []))
        r_here = ranks.get(dim, 0)
        r_above = ranks.get(dim + 1, 0)
        out[dim] = cells - r_here - r_above
    return out


#: Largest complex the homology backend will accept, in vertices.
HOMOLOGY_VERTEX_BOUND = 16


def simplicial_homology_ranks(
    dd: SimplicialComplex, field: str = "Q"
) -> dict[int, int]:
    """Reduced homology ranks of a complex, indexed by dimension from -1."""
    if dd.n > HOMOLOGY_VERTEX_BOUND:
        raise ValueError(
            f"complex on {dd.n} vertices exceeds the bound {HOMOLOGY_VERTEX_BOUND}"
        )
    faces: set[int] = set()
    for f in dd.facets:
        faces.update(submasks(f))
    return _homology_of_faces(faces, field)


# ---------------------------------------------------------------------------
# Betti numbers


@dataclass(frozen=True)
class BettiTable:
    field: str
    entries: dict[tuple[int, int], int] = dataclass_field(default_factory=dict)

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def regularity(self) -> Optional[int]:
        if not self.entries:
            return None
        return max(j - i for (i, j) in self.entries)

    def max_index(self) -> int:
        return max((i for (i, _) in self.entries), default=-1)

    def is_linear(self, degree: int) -> bool:
        return all(j - i == degree for (i, j) in self.entries)


def _lcm_lattice(gens: Sequence[Monomial], budget: int) -> list[tuple[int, ...]]:
    lattice: set[tuple[int, ...]] = {g.exponents for g in gens}
    frontier = set(lattice)
    while frontier:
        new: set[tuple[int, ...]] = set()
        for b in frontier:
            for g in gens:
                j = tuple(map(max, b, g.exponents))
                if j not in lattice:
                    new.add(j)
        lattice |= new
        if len(lattice) > budget:
            raise ValueError(f"lcm lattice exceeds budget {budget}")
        frontier = new
    return sorted(lattice)


def betti_numbers(
    ideal: OrderedIdeal, field: str = "Q", lattice_budget: int = 50_000
) -> BettiTable:
    """Graded Betti numbers via Koszul subcomplexes over the lcm lattice."""
    _field_prime(field)
    gens = minimal_generators(ideal.generators)
    if not gens:
        return BettiTable(field, {})
    n = ideal.n
    entries: dict[tuple[int, int], int] = {}
    for b in _lcm_lattice(gens, lattice_budget):
        support = [i for i in range(n) if b[i] >= 1]
        # variable index i maps to vertex i+1, i.e. bit i of a face mask
        faces = []
        for k in range(len(support) + 1):
            for combo in combinations(support, k):
                shifted = list(b)
                for i in combo:
                    shifted[i] -= 1
                if any(g.divides(Monomial(tuple(shifted))) for g in gens):
                    faces.append(sum(1 << i for i in combo))
        homology = _homology_of_faces(faces, field)
        j = sum(b)
        for dim, rank in homology.items():
            if rank:
                entries[(dim + 1, j)] = entries.get((dim + 1, j), 0) + rank
    return BettiTable(field, entries)


def betti_numbers_taylor(ideal: OrderedIdeal, field: str = "Q") -> BettiTable:
    """Graded Betti numbers from the multidegree strands of the Taylor complex.

    The Taylor complex on r minimal generators resolves the quotient ring;
    tensoring down to the field keeps, in each multidegree b, exactly the
    generator subsets with lcm b, and the homology of that strand in
    subset-size s gives beta_{s-1, b}.  Exponential in r; meant as an
    independent cross-check on small inputs.
    """
    _field_prime(field)
    gens = minimal_generators(ideal.generators)
    r = len(gens)
    if r > 16:
        raise ValueError("Taylor strands are exponential; limited to 16 generators")
    if not gens:
        return BettiTable(field, {})

    lcms: dict[frozenset[int], tuple[int, ...]] = {}
    by_degree: dict[tuple[int, ...], list[frozenset[int]]] = {}
    for k in range(1, r + 1):
        for combo in combinations(range(r), k):
            ex = gens[combo[0]].exponents
            for i in combo[1:]:
                ex = tuple(map(max, ex, gens[i].exponents))
            s = frozenset(combo)
            lcms[s] = ex
            by_degree.setdefault(ex, []).append(s)

    entries: dict[tuple[int, int], int] = {}
    for b, subsets in by_degree.items():
        by_size: dict[int, list[frozenset[int]]] = {}
        for s in subsets:
            by_size.setdefault(len(s), []).append(s)
        for lst in by_size.values():
            lst.sort(key=sorted)
        index = {
            sz: {s: i for i, s in enumerate(lst)} for sz, lst in by_size.items()
        }

        def strand_boundary(sz: int) -> list[list[int]]:
            sources = by_size.get(sz, [])
            targets = by_size.get(sz - 1, [])
            if not sources or not targets:
                return []
            rows = [[0] * len(sources) for _ in targets]
            tindex = index[sz - 1]
            for jcol, s in enumerate(sources):
                ordered = sorted(s)
                for pos, g in enumerate(ordered):
                    t = s - {g}
                    if lcms.get(t) == b:
                        rows[tindex[t]][jcol] += -1 if pos % 2 else 1
            return rows

        top = max(by_size)
        ranks = {sz: matrix_rank(strand_boundary(sz), field) for sz in range(1, top + 1)}
        j = sum(b)
        for sz in range(1, top + 1):
            cells = len(by_size.get(sz, []))
            h = cells - ranks.get(sz, 0) - ranks.get(sz + 1, 0)
            if h:
                entries[(sz - 1, j)] = entries.get((sz - 1, j), 0) + h
    return BettiTable(field, entries)


def regularity(ideal: OrderedIdeal, field: str = "Q") -> Optional[int]:
    """max(j - i) over nonzero beta_{i,j}; None for the zero ideal."""
    return betti_numbers(ideal, field).regularity()


def has_linear_resolution(ideal: OrderedIdeal, field: str = "Q") -> bool:
    """True iff beta_{i,j} = 0 whenever j - i exceeds the generation degree.

    Requires an equigenerated (or zero) ideal; the zero ideal is vacuously
    linear.
    """
    gens = minimal_generators(ideal.generators)
    if not gens:
        return True
    degrees = {g.degree for g in gens}
    if len(degrees) != 1:
        raise ValueError("linear resolution is checked for equigenerated ideals only")
    return betti_numbers(ideal, field).regularity() == degrees.pop()
