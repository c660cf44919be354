"""Decomposable clutters: certificates, verification, and bounded recognition.

A clutter is decomposable when it is built from complete clutters by two
moves: unions of two decomposable clutters whose vertex sets are
incomparable and intersect in a common clique, and simplicial-subclutter
thinning.  A certificate is the corresponding construction tree.

Recognition searches the three rules in order: exact completeness on the
support; all bipartitions of the support with clique overlap; then the
reverse of the thinning move, re-adding circuits one at a time (a thinning
step with several circuits factors into single-circuit steps, so the
first re-added circuit of any thinning witness is a single-circuit step).
Upward re-addition is the only unbounded rule, so it carries two limits: a
per-chain cap on re-added circuits and a global node budget; when the cap
bites, the search also tries the complete clutter on the current vertex
set directly as a thinning parent.

Soundness of "refuted": completeness and bipartition enumeration are
exhaustive (a union move in a minimal certificate has both parts missing
some circuit, and such a split restricted to the support is again valid,
so support splits suffice).  For the thinning rule, if C is a simplicial
subclutter of anything, some single circuit F admits a legal last step,
i.e. some (d-1)-subset of F is simplicial over C + F; if no pair (F, e)
passes, or every augmented clutter is itself refuted with a closed search,
the rule is closed.  Candidate circuits F range over the declared
universe, so a refutation is always relative to that universe; the result
carries a note saying so.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Optional, Union

from ._bits import mask_of, members, size, sort_key, subsets_of_size
from .chordality import (
    SubclutterSteps,
    is_chordal,
    is_simplicial_subclutter,
)
from .core import (
    UniformClutter,
    VertexSet,
    VertexSetLike,
    as_mask,
    complete_clutter_on,
    is_clique,
)


class CertificateError(ValueError):
    """A certificate violated one of the construction rules."""

    def __init__(self, rule: str, path: tuple[str, ...], message: str):
        super().__init__(f"{'/'.join(path) or 'root'}: [{rule}] {message}")
        self.rule = rule
        self.path = path


@dataclass(frozen=True)
class CompleteLeaf:
    """The complete d-uniform clutter on an explicit vertex set."""

    vertices: int  # mask

    @classmethod
    def on(cls, n: int, vertices: VertexSetLike) -> "CompleteLeaf":
        return cls(as_mask(n, vertices))


@dataclass(frozen=True)
class GluedUnion:
    left: "DecompCertificate"
    right: "DecompCertificate"


@dataclass(frozen=True)
class SubclutterStep:
    parent: "DecompCertificate"
    steps: SubclutterSteps


DecompCertificate = Union[CompleteLeaf, GluedUnion, SubclutterStep]


def certificate_clutter(
    cert: DecompCertificate, n: int, d: int
) -> tuple[UniformClutter, VertexSet]:
    """Reconstruct the clutter and vertex set a certificate describes.

    Raises CertificateError naming the violated rule and tree position.
    """

    def walk(node: DecompCertificate, path: tuple[str, ...]) -> tuple[UniformClutter, int]:
        if isinstance(node, CompleteLeaf):
            if node.vertices >> n:
                raise CertificateError("complete", path, "vertices outside universe")
            return complete_clutter_on(n, d, VertexSet(n, node.vertices)), node.vertices
        if isinstance(node, GluedUnion):
            lc, lv = walk(node.left, path + ("left",))
            rc, rv = walk(node.right, path + ("right",))
            if lv & ~rv == 0 or rv & ~lv == 0:
                raise CertificateError("union", path, "vertex sets comparable")
            shared = VertexSet(n, lv & rv)
            if not is_clique(lc, shared):
                raise CertificateError("union", path, "intersection not a clique in left")
            if not is_clique(rc, shared):
                raise CertificateError("union", path, "intersection not a clique in right")
            merged = UniformClutter(n, d, tuple(set(lc.circuits) | set(rc.circuits)))
            return merged, lv | rv
        if isinstance(node, SubclutterStep):
            pc, pv = walk(node.parent, path + ("parent",))
            from .chordality import apply_subclutter_steps

            try:
                thinned = apply_subclutter_steps(pc, node.steps)
            except ValueError as exc:
                raise CertificateError("subclutter", path, str(exc)) from exc
            return thinned, pv
        raise CertificateError("unknown", path, f"unrecognized node {node!r}")

    clutter, vset = walk(cert, ())
    return clutter, VertexSet(n, vset)


def check_certificate(c: UniformClutter, cert: DecompCertificate) -> None:
    """Raise CertificateError unless the certificate reconstructs exactly c."""
    built, vset = certificate_clutter(cert, c.n, c.d)
    if built.circuit_set != c.circuit_set:
        raise CertificateError(
            "reconstruction",
            (),
            f"certificate builds {len(built)} circuits, clutter has {len(c)}"
            if len(built) != len(c)
            else "certificate builds a different circuit set",
        )
    if not c.support.issubset(vset):
        raise CertificateError("reconstruction", (), "vertex set misses the support")


def verify_certificate(c: UniformClutter, cert: DecompCertificate) -> bool:
    try:
        check_certificate(c, cert)
        return True
    except CertificateError:
        return False


# ---------------------------------------------------------------------------
# gluing


def glue(
    c1: UniformClutter,
    c2: UniformClutter,
    v1: Optional[VertexSetLike] = None,
    v2: Optional[VertexSetLike] = None,
) -> UniformClutter:
    """Union of two clutters over a clique intersection of their vertex sets.

    Vertex sets default to the supports; pass them explicitly to keep
    isolated vertices.  Raises on comparable vertex sets or a non-clique
    intersection.
    """
    if c1.n != c2.n or c1.d != c2.d:
        raise ValueError("pieces must share a universe and uniformity")
    n = c1.n
    mv1 = as_mask(n, v1) if v1 is not None else c1.support.mask
    mv2 = as_mask(n, v2) if v2 is not None else c2.support.mask
    if mv1 & ~mv2 == 0 or mv2 & ~mv1 == 0:
        raise ValueError("vertex sets comparable")
    shared = VertexSet(n, mv1 & mv2)
    if not is_clique(c1, shared):
        raise ValueError("intersection not a clique in left")
    if not is_clique(c2, shared):
        raise ValueError("intersection not a clique in right")
    return UniformClutter(n, c1.d, tuple(set(c1.circuits) | set(c2.circuits)))


# ---------------------------------------------------------------------------
# recognition


@dataclass(frozen=True)
class DecomposabilityResult:
    status: str  # "decomposable" | "refuted" | "exhausted"
    certificate: Optional[DecompCertificate]
    nodes: int
    note: str = ""

    def __bool__(self) -> bool:
        return self.status == "decomposable"


_FOUND, _REFUTED, _EXHAUSTED = "decomposable", "refuted", "exhausted"


def full_deletion_steps(c: UniformClutter, order) -> SubclutterSteps:
    """Thinning steps that delete, at each order element, every remaining
    circuit through it; applied to c they yield the empty clutter."""
    residual = list(c.circuits)
    steps = []
    for e in order.elements:
        hit = tuple(f for f in residual if e & ~f == 0)
        steps.append((e, hit))
        residual = [f for f in residual if e & ~f != 0]
    return SubclutterSteps(c.n, tuple(steps))


def _empty_clutter_certificate(n: int, d: int, universe: int) -> DecompCertificate:
    leaf = CompleteLeaf(universe)
    if size(universe) < d:
        return leaf
    base = complete_clutter_on(n, d, VertexSet(n, universe))
    res = is_chordal(base)
    if res.status != "chordal":  # complete clutters always empty out
        raise RuntimeError("complete clutter did not empty; this is a bug")
    return SubclutterStep(leaf, full_deletion_steps(base, res.order))


def _single_step(parent: DecompCertificate, e: int, f: int, n: int) -> SubclutterStep:
    step = (e, (f,))
    if isinstance(parent, SubclutterStep):
        return SubclutterStep(parent.parent, SubclutterSteps(n, parent.steps.steps + (step,)))
    return SubclutterStep(parent, SubclutterSteps(n, (step,)))


def is_decomposable(
    c: UniformClutter,
    budget: int = 10**6,
    max_readded: int = 2,
) -> DecomposabilityResult:
    """Search for a decomposability certificate; tri-state result.

    ``max_readded`` caps the circuits re-added along one thinning chain
    before the search falls back to trying the complete clutter on the
    whole vertex set as a thinning parent.  "refuted" is only reported
    when every rule search closed within the universe of c.
    """
    n, d = c.n, c.d
    full_universe = (1 << n) - 1
    if not c.circuits:
        return DecomposabilityResult(
            _FOUND, _empty_clutter_certificate(n, d, full_universe), 1
        )

    nodes = 0
    memo: dict[tuple[tuple[int, ...], int, int], tuple[str, Optional[DecompCertificate]]] = {}

    def pair_uncovered(circuits: tuple[int, ...], support: int) -> bool:
        """True if some support pair lies in no circuit (a split could exist)."""
        mem = members(support)
        for a in range(len(mem)):
            for b in range(a + 1, len(mem)):
                pair = (1 << (mem[a] - 1)) | (1 << (mem[b] - 1))
                if not any(pair & ~f == 0 for f in circuits):
                    return True
        return False

    def upward_candidates(circuits: tuple[int, ...], universe: int) -> list[tuple[int, int]]:
        """Circuits F addable so that some e inside F is simplicial over C+F."""
        present = set(circuits)
        out = []
        for f in subsets_of_size(universe, d):
            if f in present:
                continue
            augmented = circuits + (f,)
            aug_set = frozenset(augmented)
            for e in subsets_of_size(f, d - 1):
                nb = e
                for g in augmented:
                    if e & ~g == 0:
                        nb |= g
                if size(nb) < d or all(
                    s in aug_set for s in subsets_of_size(nb, d)
                ):
                    out.append((f, e))
                    break
        return out

    def decide(
        circuits: tuple[int, ...], universe: int, readd_left: int
    ) -> tuple[str, Optional[DecompCertificate]]:
        nonlocal nodes
        key = (circuits, universe, readd_left)
        if key in memo:
            return memo[key]
        nodes += 1
        if nodes > budget:
            return (_EXHAUSTED, None)

        support = 0
        for f in circuits:
            support |= f

        # rule: complete clutter on its support
        if size(support) >= d and len(circuits) == comb(size(support), d):
            result = (_FOUND, CompleteLeaf(support))
            memo[key] = result
            return result

        saw_open = False

        # rule: glued union over a clique, enumerated on support splits
        if pair_uncovered(circuits, support):
            seen_splits: set[frozenset[int]] = set()
            mem = members(support)
            for assign in range(3 ** len(mem)):
                v1 = v2 = 0
                a = assign
                for v in mem:
                    which = a % 3
                    a //= 3
                    if which == 0:
                        v1 |= 1 << (v - 1)
                    elif which == 1:
                        v2 |= 1 << (v - 1)
                    else:
                        v1 |= 1 << (v - 1)
                        v2 |= 1 << (v - 1)
                if v1 & ~v2 == 0 or v2 & ~v1 == 0:
                    continue
                fs = frozenset((v1, v2))
                if fs in seen_splits:
                    continue
                seen_splits.add(fs)
                part1 = tuple(f for f in circuits if f & ~v1 == 0)
                part2 = tuple(f for f in circuits if f & ~v2 == 0)
                if len(part1) + len(part2) < len(circuits):
                    continue  # a circuit straddles the split
                if len(set(part1) | set(part2)) != len(circuits):
                    continue
                if len(part1) == len(circuits) or len(part2) == len(circuits):
                    continue  # no progress; a minimal certificate never does this
                shared = v1 & v2
                if size(shared) >= d and not all(
                    s_ in set(circuits) for s_ in subsets_of_size(shared, d)
                ):
                    continue
                st1, cert1 = decide(part1, v1, max_readded)
                if st1 == _EXHAUSTED:
                    saw_open = True
                    continue
                if st1 == _REFUTED:
                    continue
                st2, cert2 = decide(part2, v2, max_readded)
                if st2 == _EXHAUSTED:
                    saw_open = True
                    continue
                if st2 == _REFUTED:
                    continue
                result = (_FOUND, GluedUnion(cert1, cert2))
                memo[key] = result
                return result

        # rule: reverse thinning, one circuit at a time
        candidates = upward_candidates(circuits, universe)
        if candidates:
            if readd_left > 0:
                for f, e in candidates:
                    st, cert = decide(
                        tuple(sorted(circuits + (f,), key=sort_key)),
                        universe,
                        readd_left - 1,
                    )
                    if st == _FOUND:
                        result = (_FOUND, _single_step(cert, e, f, n))
                        memo[key] = result
                        return result
                    if st == _EXHAUSTED:
                        saw_open = True
            else:
                saw_open = True

            if saw_open:
                # the re-addition cap bit somewhere; before giving up, try the
                # complete clutter on the whole universe as a thinning parent
                base = complete_clutter_on(n, d, VertexSet(n, universe))
                if len(circuits) < len(base.circuits):
                    target = UniformClutter(n, d, circuits)
                    found = is_simplicial_subclutter(
                        base, target, budget=max(budget - nodes, 1)
                    )
                    nodes += found.nodes
                    if found.steps is not None:
                        result = (
                            _FOUND,
                            SubclutterStep(CompleteLeaf(universe), found.steps),
                        )
                        memo[key] = result
                        return result

        status = _EXHAUSTED if saw_open or nodes > budget else _REFUTED
        result = (status, None)
        memo[key] = result
        return result

    status, cert = decide(c.circuits, full_universe, max_readded)
    note = (
        f"thinning parents searched within the universe [{n}] "
        f"with at most {max_readded} circuits re-added per chain"
        if status == _REFUTED
        else ""
    )
    return DecomposabilityResult(status, cert, nodes, note)


# ---------------------------------------------------------------------------
# random generation


def random_decomposable(
    n: int, d: int, seed: int, max_depth: int = 3
) -> tuple[UniformClutter, DecompCertificate]:
    """A seeded random decomposable clutter with its certificate.

    Leaves always use their whole assigned vertex set, glue overlaps are
    kept below size d (hence cliques unconditionally), and thinning walks
    random admissible single-circuit removals, so every generated
    certificate verifies by construction.
    """
    if not (n >= d >= 2):
        raise ValueError("need n >= d >= 2")
    rng = random.Random(seed)
    full = (1 << n) - 1

    def build(universe: int, depth: int) -> DecompCertificate:
        verts = members(universe)
        options = ["leaf"]
        if depth > 0 and len(verts) >= 2:
            options += ["glue", "thin", "thin"]
        move = rng.choice(options)
        if move == "glue":
            w_size = rng.randrange(0, min(d, len(verts) - 1))
            shuffled = list(verts)
            rng.shuffle(shuffled)
            w = shuffled[:w_size]
            rest = shuffled[w_size:]
            cut = rng.randrange(1, len(rest))
            v1 = mask_of(w + rest[:cut])
            v2 = mask_of(w + rest[cut:])
            return GluedUnion(build(v1, depth - 1), build(v2, depth - 1))
        if move == "thin":
            parent = build(universe, depth - 1)
            clutter, _ = certificate_clutter(parent, n, d)
            steps = []
            residual = list(clutter.circuits)
            for _ in range(rng.randrange(0, max(len(residual), 1))):
                choices = []
                res_set = frozenset(residual)
                for f in residual:
                    for e in subsets_of_size(f, d - 1):
                        nb = e
                        for g in residual:
                            if e & ~g == 0:
                                nb |= g
                        if size(nb) < d or all(
                            s in res_set for s in subsets_of_size(nb, d)
                        ):
                            choices.append((f, e))
                            break
                if not choices:
                    break
                f, e = rng.choice(choices)
                steps.append((e, (f,)))
                residual = [g for g in residual if g != f]
            if not steps:
                return parent
            return SubclutterStep(parent, SubclutterSteps(n, tuple(steps)))
        return CompleteLeaf(universe)

    cert = build(full, max_depth)
    clutter, _ = certificate_clutter(cert, n, d)
    check_certificate(clutter, cert)
    return clutter, cert
