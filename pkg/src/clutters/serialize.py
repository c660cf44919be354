"""JSON round-trips for every wire format.

Vertices are 1-based everywhere.  Canonical serialization sorts each set
ascending and lists of sets lexicographically; the domain types already
store canonical order, so dumping preserves it.
"""

from __future__ import annotations


from .chordality import SimplicialSequence, SubclutterSteps
from .core import SimplicialComplex, UniformClutter
from .decomposable import CompleteLeaf, DecompCertificate, GluedUnion, SubclutterStep
from .ideals import Monomial, OrderedIdeal
from .resolution import BettiTable


def clutter_to_json(c: UniformClutter) -> dict:
    return {"n": c.n, "d": c.d, "circuits": [list(v.members) for v in c.circuit_sets]}


def clutter_from_json(data: dict) -> UniformClutter:
    return UniformClutter.of(int(data["n"]), int(data["d"]), data["circuits"])


def complex_to_json(dd: SimplicialComplex) -> dict:
    return {"n": dd.n, "facets": [list(v.members) for v in dd.facet_sets]}


def complex_from_json(data: dict) -> SimplicialComplex:
    return SimplicialComplex.of(int(data["n"]), data["facets"])


def ideal_to_json(ideal: OrderedIdeal) -> dict:
    return {"n": ideal.n, "generators": [list(g.exponents) for g in ideal.generators]}


def ideal_from_json(data: dict) -> OrderedIdeal:
    n = int(data["n"])
    if "squarefree_generators" in data:
        gens = [Monomial.from_support(n, s) for s in data["squarefree_generators"]]
    else:
        gens = [Monomial.of(n, ex) for ex in data["generators"]]
    return OrderedIdeal(n, tuple(gens))


def sequence_to_json(seq: SimplicialSequence) -> dict:
    return {"elements": [list(e.members) for e in seq.element_sets]}


def sequence_from_json(n: int, data: dict) -> SimplicialSequence:
    return SimplicialSequence.of(n, data["elements"])


def steps_to_json(steps: SubclutterSteps) -> dict:
    from ._bits import members

    return {
        "steps": [
            {"e": list(members(e)), "A": [list(members(f)) for f in aa]}
            for e, aa in steps.steps
        ]
    }


def steps_from_json(n: int, data: dict) -> SubclutterSteps:
    return SubclutterSteps.of(
        n, [(step["e"], step["A"]) for step in data["steps"]]
    )


def certificate_to_json(cert: DecompCertificate) -> dict:
    from ._bits import members

    if isinstance(cert, CompleteLeaf):
        return {"kind": "complete", "vertices": list(members(cert.vertices))}
    if isinstance(cert, GluedUnion):
        return {
            "kind": "union",
            "left": certificate_to_json(cert.left),
            "right": certificate_to_json(cert.right),
        }
    if isinstance(cert, SubclutterStep):
        return {
            "kind": "substep",
            "parent": certificate_to_json(cert.parent),
            **steps_to_json(cert.steps),
        }
    raise TypeError(f"not a certificate: {cert!r}")


def certificate_from_json(n: int, data: dict) -> DecompCertificate:
    kind = data["kind"]
    if kind == "complete":
        return CompleteLeaf.on(n, data["vertices"])
    if kind == "union":
        return GluedUnion(
            certificate_from_json(n, data["left"]),
            certificate_from_json(n, data["right"]),
        )
    if kind == "substep":
        return SubclutterStep(
            certificate_from_json(n, data["parent"]), steps_from_json(n, data)
        )
    raise ValueError(f"unknown certificate kind {kind!r}")


def betti_to_json(table: BettiTable) -> dict:
    return {
        "field": table.field,
        "entries": [
            {"i": i, "j": j, "beta": beta}
            for (i, j), beta in sorted(table.entries.items())
        ],
    }


def betti_from_json(data: dict) -> BettiTable:
    return BettiTable(
        data["field"],
        {(int(e["i"]), int(e["j"])): int(e["beta"]) for e in data["entries"]},
    )
