"""Monomial ideals: colon ideals, linear quotients, and generator recognizers.

Everything is a monomial ideal in K[x_1..x_n]; membership never needs
Groebner machinery because a monomial lies in I iff some minimal generator
divides it.  The linear-quotients condition for an ordered generating set
u_1 < ... < u_r says each colon ideal (u_1..u_{i-1}) : u_i is generated by
variables; concretely, for every j < i some k < i has u_k/gcd(u_k,u_i)
equal to a single variable that divides u_j/gcd(u_j,u_i).

The fixed lexicographic convention is x_1 > x_2 > ... > x_n; on exponent
vectors this is plain tuple comparison.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from ._bits import mask_of, members, size
from .core import UniformClutter, VertexSet, VertexSetLike, as_mask


@dataclass(frozen=True)
class Monomial:
    """A monomial given by its exponent vector (index i is x_{i+1})."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be non-negative")

    @classmethod
    def of(cls, n: int, exponents: Iterable[int]) -> "Monomial":
        ex = tuple(exponents)
        if len(ex) != n:
            raise ValueError(f"expected {n} exponents, got {len(ex)}")
        return cls(ex)

    @classmethod
    def from_support(cls, n: int, vertices: VertexSetLike) -> "Monomial":
        m = as_mask(n, vertices)
        return cls(tuple((m >> i) & 1 for i in range(n)))

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    @property
    def support_mask(self) -> int:
        m = 0
        for i, e in enumerate(self.exponents):
            if e:
                m |= 1 << i
        return m

    def support(self) -> VertexSet:
        return VertexSet(self.n, self.support_mask)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(map(min, self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(map(max, self.exponents, other.exponents)))

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def quotient_by(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other)."""
        return Monomial(
            tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents))
        )

    def divide_exact(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError("not divisible")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def canonical_key(self) -> tuple:
        """Sort key: degree, then the sorted multiset of variable indices."""
        idx = []
        for i, e in enumerate(self.exponents):
            idx.extend([i + 1] * e)
        return (self.degree, tuple(idx))

    def lex_greater(self, other: "Monomial") -> bool:
        """Lexicographic comparison induced by x_1 > x_2 > ... > x_n."""
        return self.exponents > other.exponents

    def __str__(self) -> str:
        if self.degree == 0:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)


def variable(n: int, i: int) -> Monomial:
    return Monomial(tuple(1 if j == i - 1 else 0 for j in range(n)))


@dataclass(frozen=True)
class OrderedIdeal:
    """A monomial ideal with an ordered generating list (order matters)."""

    n: int
    generators: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.n != self.n:
                raise ValueError("generator in the wrong polynomial ring")

    @classmethod
    def of(cls, n: int, gens: Iterable[Monomial]) -> "OrderedIdeal":
        return cls(n, tuple(gens))

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[VertexSetLike]) -> "OrderedIdeal":
        return cls(n, tuple(Monomial.from_support(n, s) for s in supports))

    def is_zero(self) -> bool:
        return not self.generators

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def is_equigenerated(self) -> bool:
        degs = {g.degree for g in self.generators}
        return len(degs) <= 1

    @property
    def degree(self) -> Optional[int]:
        degs = {g.degree for g in self.generators}
        return degs.pop() if len(degs) == 1 else None

    def contains(self, u: Monomial) -> bool:
        return any(g.divides(u) for g in self.generators)

    def minimalized(self) -> "OrderedIdeal":
        return OrderedIdeal(self.n, tuple(minimal_generators(self.generators)))

    def is_minimally_generated(self) -> bool:
        gens = self.generators
        for i, u in enumerate(gens):
            for j, v in enumerate(gens):
                if i != j and v.divides(u):
                    return False
        return True


def minimal_generators(gens: Sequence[Monomial]) -> list[Monomial]:
    """Divisibility-minimal sublist, deduplicated, in canonical order."""
    uniq = sorted(set(gens), key=Monomial.canonical_key)
    out = []
    for u in uniq:
        if not any(v != u and v.divides(u) for v in uniq):
            out.append(u)
    return out


def colon_by_monomial(ideal: OrderedIdeal, v: Monomial) -> OrderedIdeal:
    """The colon ideal I : (v), generated by u/gcd(u,v), minimalized."""
    if v.n != ideal.n:
        raise ValueError("monomial in the wrong polynomial ring")
    quotients = [u.quotient_by(v) for u in ideal.generators]
    # if v lies in I some quotient is 1 and the colon is the unit ideal
    return OrderedIdeal(ideal.n, tuple(minimal_generators(quotients)))


@dataclass(frozen=True)
class LinearQuotientsCheck:
    ok: bool
    fail_index: Optional[int]  # index into the order (0-based) of the bad colon

    def __bool__(self) -> bool:
        return self.ok


def has_linear_quotients_in_order(ideal: OrderedIdeal) -> LinearQuotientsCheck:
    """Check the linear-quotients condition for the given generator order.

    Requires a minimal generating set.  For each i >= 1, collects the
    variables a with u_k/gcd(u_k,u_i) = x_a for some k < i, then demands
    every u_j/gcd(u_j,u_i), j < i, be divisible by one of them.
    """
    gens = ideal.generators
    if not ideal.is_minimally_generated():
        raise ValueError("generators must be minimal (no generator divides another)")
    for i in range(1, len(gens)):
        ui = gens[i].exponents
        linear_vars = set()
        for k in range(i):
            q = gens[k].quotient_by(gens[i])
            if q.degree == 1:
                linear_vars.add(q.support_mask)
        if not linear_vars:
            return LinearQuotientsCheck(False, i)
        lin_mask = 0
        for m in linear_vars:
            lin_mask |= m
        for j in range(i):
            uj = gens[j].exponents
            # need some tracked variable a with exponent of a in u_j > in u_i
            ok = False
            m = lin_mask
            while m:
                low = m & -m
                a = low.bit_length() - 1
                if uj[a] > ui[a]:
                    ok = True
                    break
                m ^= low
            if not ok:
                return LinearQuotientsCheck(False, i)
    return LinearQuotientsCheck(True, None)


@dataclass(frozen=True)
class LinearQuotientsOrderResult:
    order: Optional[tuple[int, ...]]  # permutation of generator indices
    exhausted: bool
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.order is not None


def _admissible(gens: Sequence[Monomial], placed: Sequence[int], cand: int) -> bool:
    """Would appending gens[cand] after the placed set keep linear quotients?

    The condition depends only on the set of placed generators, not their
    internal order, which is what makes memoization on that set sound.
    """
    ui = gens[cand]
    linear_vars: set[int] = set()
    for k in placed:
        q = gens[k].quotient_by(ui)
        if q.degree == 1:
            linear_vars.add(q.support_mask)
    if not linear_vars and placed:
        return False
    exp_i = ui.exponents
    for j in placed:
        exp_j = gens[j].exponents
        if not any(
            exp_j[m.bit_length() - 1] > exp_i[m.bit_length() - 1] for m in linear_vars
        ):
            return False
    return True


def find_linear_quotients_order(
    gens: Sequence[Monomial], budget: int = 10**6
) -> LinearQuotientsOrderResult:
    """Backtracking search for a linear-quotients order of the given generators.

    Admissibility of the next generator depends only on the set already
    placed, so failed placement sets are memoized.  An unexhausted empty
    search proves no order exists.
    """
    gens = minimal_generators(gens)
    if len({g.degree for g in gens}) > 1:
        warnings.warn(
            "linear-quotients order search on a non-equigenerated ideal; "
            "results are only meaningful per the ordered colon condition",
            stacklevel=2,
        )
    r = len(gens)
    if r <= 1:
        return LinearQuotientsOrderResult(tuple(range(r)), False, 0)

    failed: set[int] = set()  # bitmask over generator indices
    nodes = 0
    exhausted = False

    def candidates(placed_mask: int, placed: list[int]) -> list[int]:
        return [
            i
            for i in range(r)
            if not (placed_mask >> i) & 1 and _admissible(gens, placed, i)
        ]

    stack: list[tuple[int, list[int], int]] = [(0, candidates(0, []), 0)]
    placed: list[int] = []
    while stack:
        mask, cands, pos = stack[-1]
        if pos >= len(cands):
            failed.add(mask)
            stack.pop()
            if placed:
                placed.pop()
            continue
        stack[-1] = (mask, cands, pos + 1)
        i = cands[pos]
        nodes += 1
        if nodes > budget:
            exhausted = True
            break
        child = mask | (1 << i)
        if child in failed:
            continue
        placed.append(i)
        if len(placed) == r:
            return LinearQuotientsOrderResult(tuple(placed), False, nodes)
        stack.append((child, candidates(child, placed), 0))
    return LinearQuotientsOrderResult(None, exhausted, nodes)


# ---------------------------------------------------------------------------
# constructive orders


def partition_order(
    n: int,
    d: int,
    n1: VertexSetLike,
    n2: VertexSetLike,
    n3: VertexSetLike = (),
) -> OrderedIdeal:
    """The squarefree degree-d monomials meeting both n1 and n2, in an order
    with linear quotients.

    Generators are grouped into blocks by (l, l') where the support meets
    n1 in d-l vertices, n2 in l' and n3 in l-l'; blocks are emitted in
    ascending (l, l'), and within a block ascending lexicographically after
    relabeling so that every n1-vertex precedes every n2-vertex precedes
    every n3-vertex.
    """
    m1, m2, m3 = (as_mask(n, s) for s in (n1, n2, n3))
    if m1 & m2 or m1 & m3 or m2 & m3:
        raise ValueError("the three vertex groups must be disjoint")
    if not m1 or not m2:
        raise ValueError("the first two vertex groups must be non-empty")

    rename: dict[int, int] = {}
    pos = 0
    for group in (m1, m2, m3):
        for v in members(group):
            rename[v] = pos
            pos += 1

    universe = m1 | m2 | m3
    gens = []
    for combo in combinations(members(universe), d):
        mm = mask_of(combo)
        if mm & m1 and mm & m2:
            l = d - size(mm & m1)
            lp = size(mm & m2)
            renamed = [0] * pos
            for v in combo:
                renamed[rename[v]] = 1
            gens.append(((l, lp, tuple(renamed)), mm))
    gens.sort(key=lambda t: t[0])
    return OrderedIdeal.from_supports(n, (VertexSet(n, mm) for _, mm in gens))


def glued_order(
    c1: UniformClutter,
    c2: UniformClutter,
    order1: OrderedIdeal,
    order2: OrderedIdeal,
    v1: Optional[VertexSetLike] = None,
    v2: Optional[VertexSetLike] = None,
) -> OrderedIdeal:
    """Linear-quotients order for the complement ideal of a glued clutter.

    Receives the two glued pieces with linear-quotients orders for their
    own complement ideals (within the complete clutters on their vertex
    sets) and emits: first the cross monomials meeting both private vertex
    groups in the partition order, then order1, then order2.
    """
    if c1.n != c2.n or c1.d != c2.d:
        raise ValueError("pieces must share a universe and uniformity")
    n, d = c1.n, c1.d
    mv1 = as_mask(n, v1) if v1 is not None else c1.support.mask
    mv2 = as_mask(n, v2) if v2 is not None else c2.support.mask
    p1 = mv1 & ~mv2
    p2 = mv2 & ~mv1
    shared = mv1 & mv2
    if not p1 or not p2:
        raise ValueError("vertex sets comparable")
    from .core import is_clique

    if not is_clique(c1, VertexSet(n, shared)):
        raise ValueError("intersection not a clique in left")
    if not is_clique(c2, VertexSet(n, shared)):
        raise ValueError("intersection not a clique in right")

    for c, mv, order, name in ((c1, mv1, order1, "left"), (c2, mv2, order2, "right")):
        expected = {
            s
            for s in combinations(members(mv), d)
            if mask_of(s) not in c.circuit_set
        }
        got = {tuple(g.support().members) for g in order.generators}
        if {tuple(sorted(s)) for s in expected} != got:
            raise ValueError(
                f"{name} order does not generate the complement ideal of the {name} piece"
            )

    cross = partition_order(
        n, d, VertexSet(n, p1), VertexSet(n, p2), VertexSet(n, shared)
    )
    return OrderedIdeal(
        n, cross.generators + order1.generators + order2.generators
    )


# ---------------------------------------------------------------------------
# circuit ideals and powers


def circuit_ideal(c: UniformClutter) -> OrderedIdeal:
    """The squarefree ideal generated by the circuit monomials, canonically
    ordered.  The empty clutter gives the zero ideal."""
    return OrderedIdeal.from_supports(c.n, c.circuit_sets)


def complement_ideal(c: UniformClutter) -> OrderedIdeal:
    """Circuit ideal of the complement clutter."""
    from .core import complement_clutter

    return circuit_ideal(complement_clutter(c))


def ideal_power(ideal: OrderedIdeal, k: int) -> OrderedIdeal:
    """The k-th power, minimalized. Naive products; fine at desk scale."""
    if k < 1:
        raise ValueError("power must be >= 1")
    current = list(ideal.generators)
    for _ in range(k - 1):
        prods = {u.mul(v) for u in current for v in ideal.generators}
        current = minimal_generators(sorted(prods, key=Monomial.canonical_key))
    return OrderedIdeal(ideal.n, tuple(minimal_generators(current)))


# ---------------------------------------------------------------------------
# recognizers


def _require_squarefree(ideal: OrderedIdeal) -> None:
    if not ideal.is_squarefree():
        raise ValueError("squarefree ideal required")


@dataclass(frozen=True)
class RecognizerVerdict:
    holds: bool
    witness: Optional[tuple[Monomial, int]]  # offending generator and variable

    def __bool__(self) -> bool:
        return self.holds


def is_squarefree_stable(ideal: OrderedIdeal) -> RecognizerVerdict:
    """Squarefree stable: for each generator u and i < m(u) with x_i not
    dividing u, the exchange x_i * u / x_{m(u)} stays in the ideal."""
    _require_squarefree(ideal)
    n = ideal.n
    for u in ideal.generators:
        sup = u.support().members
        m = sup[-1]
        base = u.divide_exact(variable(n, m))
        for i in range(1, m):
            if u.exponents[i - 1]:
                continue
            if not ideal.contains(base.mul(variable(n, i))):
                return RecognizerVerdict(False, (u, i))
    return RecognizerVerdict(True, None)


def is_squarefree_strongly_stable(ideal: OrderedIdeal) -> RecognizerVerdict:
    """Squarefree strongly stable: exchanges x_i * u / x_j for every j in
    the support and every smaller i outside it stay in the ideal."""
    _require_squarefree(ideal)
    n = ideal.n
    for u in ideal.generators:
        for j in u.support().members:
            base = u.divide_exact(variable(n, j))
            for i in range(1, j):
                if u.exponents[i - 1]:
                    continue
                if not ideal.contains(base.mul(variable(n, i))):
                    return RecognizerVerdict(False, (u, i))
    return RecognizerVerdict(True, None)


def is_squarefree_lexsegment(ideal: OrderedIdeal) -> RecognizerVerdict:
    """Squarefree lexsegment: every squarefree monomial of the generation
    degree that is lex-greater than a generator lies in the ideal."""
    _require_squarefree(ideal)
    if not ideal.is_equigenerated():
        raise ValueError("equigenerated ideal required")
    if ideal.is_zero():
        return RecognizerVerdict(True, None)
    n, d = ideal.n, ideal.degree
    for u in ideal.generators:
        for combo in combinations(range(1, n + 1), d):
            v = Monomial.from_support(n, combo)
            if v.lex_greater(u) and not ideal.contains(v):
                return RecognizerVerdict(False, (v, 0))
    return RecognizerVerdict(True, None)


def is_matroidal(ideal: OrderedIdeal) -> RecognizerVerdict:
    """Exchange property between every pair of generators: if x_i divides u
    but not v, some x_j dividing v but not u has x_j * u / x_i in the ideal."""
    _require_squarefree(ideal)
    if not ideal.is_equigenerated():
        raise ValueError("equigenerated ideal required")
    n = ideal.n
    for u in ideal.generators:
        for v in ideal.generators:
            if u == v:
                continue
            only_u = u.support_mask & ~v.support_mask
            only_v = v.support_mask & ~u.support_mask
            for i in members(only_u):
                base = u.divide_exact(variable(n, i))
                if not any(
                    ideal.contains(base.mul(variable(n, j))) for j in members(only_v)
                ):
                    return RecognizerVerdict(False, (u, i))
    return RecognizerVerdict(True, None)
