"""Built-in showcase instances with pinned expected verdicts.

Each entry builds a small clutter with a known story (chordal with a
classical deletion order, provably non-decomposable despite linear
quotients, decomposable by an explicit certificate, a power losing
linearity) and re-derives every claim with the engines.  The CLI exposes
them by name; the test suite pins the whole table so any behavioral drift
fails CI.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .chordality import (
    SimplicialSequence,
    SubclutterSteps,
    is_chordal,
    maximal_subcircuits,
    is_simplicial,
    validate_simplicial_sequence,
)
from .core import UniformClutter, complement_clutter
from .decomposable import (
    CompleteLeaf,
    GluedUnion,
    SubclutterStep,
    is_decomposable,
    verify_certificate,
)
from .ideals import (
    OrderedIdeal,
    circuit_ideal,
    has_linear_quotients_in_order,
    ideal_power,
    is_matroidal,
    is_squarefree_stable,
)
from .resolution import has_linear_resolution


def chordal_pair_c() -> UniformClutter:
    return UniformClutter.of(
        6,
        3,
        [
            (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4),
            (1, 2, 5), (1, 2, 6), (1, 5, 6), (2, 5, 6),
        ],
    )


CHORDAL_PAIR_C_ORDER = ((1, 3), (1, 4), (2, 4), (1, 2), (2, 6), (1, 5))


def chordal_pair_d() -> UniformClutter:
    return UniformClutter.of(
        5, 3, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5)]
    )


def lq_non_decomposable() -> UniformClutter:
    return UniformClutter.of(5, 3, [(1, 2, 5), (1, 3, 5), (1, 4, 5), (2, 3, 4)])


#: The complement ideal of ``lq_non_decomposable`` in the order that has
#: linear quotients.
LQ_NON_DECOMPOSABLE_ORDER = (
    (1, 2, 3), (1, 2, 4), (1, 3, 4), (3, 4, 5), (2, 4, 5), (2, 3, 5),
)


def glued_pair() -> UniformClutter:
    return UniformClutter.of(
        7,
        3,
        [(1, 2, 3), (1, 2, 4), (1, 3, 4), (4, 5, 6), (4, 5, 7), (4, 6, 7), (5, 6, 7)],
    )


def glued_pair_certificate() -> SubclutterStep | GluedUnion:
    left = SubclutterStep(
        CompleteLeaf.on(7, (1, 2, 3, 4)),
        SubclutterSteps.of(7, [((2, 3), [(2, 3, 4)])]),
    )
    return GluedUnion(left, CompleteLeaf.on(7, (4, 5, 6, 7)))


def umbrella() -> UniformClutter:
    return UniformClutter.of(5, 3, [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 2, 5)])


def umbrella_certificate() -> SubclutterStep:
    glued = GluedUnion(CompleteLeaf.on(5, (1, 2, 3, 4)), CompleteLeaf.on(5, (1, 2, 4, 5)))
    steps = SubclutterSteps.of(
        5,
        [
            ((3, 4), [(2, 3, 4)]),
            ((2, 4), [(1, 2, 4), (2, 4, 5)]),
        ],
    )
    return SubclutterStep(glued, steps)


def square_nonlinear() -> UniformClutter:
    return UniformClutter.of(
        6,
        3,
        [
            (1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 5),
            (1, 4, 6), (1, 5, 6), (2, 3, 5), (2, 3, 6), (2, 4, 5), (2, 4, 6),
        ],
    )


SQUARE_NONLINEAR_STEPS = (
    ((5, 6), [(2, 5, 6), (3, 5, 6), (4, 5, 6)]),
    ((3, 6), [(1, 3, 6), (3, 4, 6)]),
    ((3, 4), [(2, 3, 4), (3, 4, 5)]),
    ((4, 5), [(1, 4, 5)]),
)


@dataclass(frozen=True)
class GalleryOutcome:
    name: str
    ok: bool
    verdict: str
    details: dict


def _run_chordal_pair_c(budget: int) -> GalleryOutcome:
    c = chordal_pair_c()
    res = is_chordal(c, budget=budget)
    order = SimplicialSequence.of(6, CHORDAL_PAIR_C_ORDER)
    classical_ok = validate_simplicial_sequence(c, order).is_empty()
    ok = res.status == "chordal" and classical_ok
    return GalleryOutcome(
        "chordal-pair-c",
        ok,
        res.status,
        {
            "order": [list(e.members) for e in (res.order.element_sets if res.order else ())],
            "classical_order_validates": classical_ok,
        },
    )


def _run_chordal_pair_d(budget: int) -> GalleryOutcome:
    c = chordal_pair_d()
    res = is_chordal(c, budget=budget)
    no_simplicial = not any(is_simplicial(c, e) for e in maximal_subcircuits(c))
    ok = res.status == "not_chordal" and no_simplicial
    return GalleryOutcome(
        "chordal-pair-d",
        ok,
        res.status,
        {"has_simplicial_maximal_subcircuit": not no_simplicial},
    )


def _run_lq_non_decomposable(budget: int) -> GalleryOutcome:
    c = lq_non_decomposable()
    ideal = OrderedIdeal.from_supports(5, LQ_NON_DECOMPOSABLE_ORDER)
    lq = has_linear_quotients_in_order(ideal)
    same = {g.support_mask for g in ideal.generators} == {
        g.support_mask for g in circuit_ideal(complement_clutter(c)).generators
    }
    dec = is_decomposable(c, budget=budget)
    ok = lq.ok and same and dec.status == "refuted"
    return GalleryOutcome(
        "lq-non-decomposable",
        ok,
        f"linear-quotients={lq.ok}, decomposable={dec.status}",
        {"refutation_note": dec.note, "nodes": dec.nodes},
    )


def _run_glued_pair(budget: int) -> GalleryOutcome:
    c = glued_pair()
    hand = verify_certificate(c, glued_pair_certificate())
    dec = is_decomposable(c, budget=budget)
    found_ok = dec.status == "decomposable" and verify_certificate(c, dec.certificate)
    return GalleryOutcome(
        "glued-pair",
        hand and found_ok,
        dec.status,
        {"hand_certificate_verifies": hand, "nodes": dec.nodes},
    )


def _run_umbrella(budget: int) -> GalleryOutcome:
    c = umbrella()
    hand = verify_certificate(c, umbrella_certificate())
    dec = is_decomposable(c, budget=budget)
    found_ok = dec.status == "decomposable" and verify_certificate(c, dec.certificate)
    return GalleryOutcome(
        "umbrella",
        hand and found_ok,
        dec.status,
        {"hand_certificate_verifies": hand, "nodes": dec.nodes},
    )


def _run_square_nonlinear(budget: int) -> GalleryOutcome:
    c = square_nonlinear()
    ideal = circuit_ideal(complement_clutter(c))
    linear = {f: has_linear_resolution(ideal, f) for f in ("Q", "F2", "F3")}
    square = ideal_power(ideal, 2)
    square_linear = {f: has_linear_resolution(square, f) for f in ("Q", "F2", "F3")}
    stable = is_squarefree_stable(ideal)
    matroidal = is_matroidal(ideal)
    dec = is_decomposable(c, budget=budget)
    ok = (
        all(linear.values())
        and not all(square_linear.values())
        and not stable.holds
        and not matroidal.holds
        and dec.status == "decomposable"
    )
    return GalleryOutcome(
        "square-nonlinear",
        ok,
        f"ideal linear={all(linear.values())}, square linear per field={square_linear}",
        {
            "generators": len(ideal.generators),
            "square_generators": len(square.generators),
            "square_linear_by_field": square_linear,
            "squarefree_stable": stable.holds,
            "matroidal": matroidal.holds,
            "decomposable": dec.status,
        },
    )


INSTANCES: dict[str, tuple[str, Callable[[int], GalleryOutcome]]] = {
    "chordal-pair-c": (
        "8 circuits on [6]; chordal, classical deletion order validates",
        _run_chordal_pair_c,
    ),
    "chordal-pair-d": (
        "6 circuits on [5]; no simplicial maximal subcircuit, not chordal",
        _run_chordal_pair_d,
    ),
    "lq-non-decomposable": (
        "complement ideal has linear quotients yet the clutter is not decomposable",
        _run_lq_non_decomposable,
    ),
    "glued-pair": (
        "two complete pieces glued over a vertex, one circuit thinned away",
        _run_glued_pair,
    ),
    "umbrella": (
        "fan of four triangles; decomposable via a glue and two thinning steps",
        _run_umbrella,
    ),
    "square-nonlinear": (
        "decomposable clutter whose complement ideal is linear but its square is not",
        _run_square_nonlinear,
    ),
}


def run_instance(name: str, budget: int = 10**6) -> GalleryOutcome:
    if name not in INSTANCES:
        raise KeyError(name)
    return INSTANCES[name][1](budget)
