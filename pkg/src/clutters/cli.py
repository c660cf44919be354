"""Batch front-end: load objects, run decisions, emit machine-readable reports.

Exit codes: 0 the property holds, 1 it is refuted, 2 the search was
exhausted or inconclusive, 3 input error.  Every command prints one JSON
report to stdout; certificates can additionally be written to files with
--output-dir.  The default search budget comes from CLUTTERS_BUDGET.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path
from typing import Any, Optional

from . import gallery, serialize
from .chordality import is_chordal
from .core import SimplicialComplex, UniformClutter
from .decomposable import is_decomposable
from .ideals import (
    OrderedIdeal,
    find_linear_quotients_order,
    has_linear_quotients_in_order,
    ideal_power,
    is_matroidal,
    is_squarefree_lexsegment,
    is_squarefree_stable,
    is_squarefree_strongly_stable,
)
from .quasiforest import find_leaf_order
from .resolution import betti_numbers
from .shelling import find_shelling, is_extendably_shellable, is_shelling_order, simon_equivalence_check

OK, REFUTED, EXHAUSTED, INPUT_ERROR = 0, 1, 2, 3


def _default_budget() -> int:
    try:
        return int(os.environ.get("CLUTTERS_BUDGET", ""))
    except ValueError:
        return 10**6


def _load_json(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        _fail(f"cannot read {path}: {exc}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        _fail(f"malformed JSON: {exc.msg}", line=exc.lineno, column=exc.colno)


def _fail(message: str, **extra: Any) -> None:
    print(json.dumps({"error": message, **extra}))
    raise SystemExit(INPUT_ERROR)


def _digest(data: Any) -> str:
    return hashlib.sha256(
        json.dumps(data, sort_keys=True, separators=(",", ":")).encode()
    ).hexdigest()


def _emit(
    args: argparse.Namespace,
    verdict: str,
    code: int,
    digest: Optional[str],
    started: float,
    certificate: Any = None,
    stats: Optional[dict] = None,
) -> int:
    cert_path = None
    if certificate is not None and args.output_dir:
        outdir = Path(args.output_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        cert_path = str(outdir / f"{args.command}-certificate.json")
        Path(cert_path).write_text(json.dumps(certificate, indent=2) + "\n")
    report = {
        "command": args.command,
        "input_digest": digest,
        "verdict": verdict,
        "certificate": certificate,
        "certificate_path": cert_path,
        "elapsed_seconds": round(time.monotonic() - started, 6),
        "stats": stats or {},
    }
    print(json.dumps(report, indent=2))
    return code


def _clutter_arg(data: Any) -> UniformClutter:
    try:
        return serialize.clutter_from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        _fail(f"bad clutter: {exc}")


def _complex_arg(data: Any) -> SimplicialComplex:
    try:
        return serialize.complex_from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        _fail(f"bad complex: {exc}")


def _ideal_arg(data: Any) -> OrderedIdeal:
    try:
        return serialize.ideal_from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        _fail(f"bad ideal: {exc}")


def cmd_check_chordal(args) -> int:
    started = time.monotonic()
    data = _load_json(args.input)
    c = _clutter_arg(data)
    mode = "greedy" if args.mode == "greedy" else "complete-search"
    res = is_chordal(c, mode=mode, budget=args.budget)
    cert = serialize.sequence_to_json(res.order) if res.order else None
    code = {"chordal": OK, "not_chordal": REFUTED, "inconclusive": EXHAUSTED}[res.status]
    return _emit(
        args, res.status, code, _digest(data), started, cert,
        {"nodes": res.nodes, "memo_hits": res.memo_hits, "mode": mode},
    )


def cmd_check_decomposable(args) -> int:
    started = time.monotonic()
    data = _load_json(args.input)
    c = _clutter_arg(data)
    res = is_decomposable(c, budget=args.budget, max_readded=args.max_readded)
    cert = serialize.certificate_to_json(res.certificate) if res.certificate else None
    code = {"decomposable": OK, "refuted": REFUTED, "exhausted": EXHAUSTED}[res.status]
    return _emit(
        args, res.status, code, _digest(data), started, cert,
        {"nodes": res.nodes, "note": res.note},
    )


def cmd_check_linear_quotients(args) -> int:
    started = time.monotonic()
    data = _load_json(args.input)
    ideal = _ideal_arg(data)
    try:
        check = has_linear_quotients_in_order(ideal)
    except ValueError as exc:
        _fail(str(exc))
    verdict = "linear-quotients" if check.ok else "fails"
    return _emit(
        args, verdict, OK if check.ok else REFUTED, _digest(data), started,
        None, {"fail_index": check.fail_index},
    )


def cmd_find_lq_order(args) -> int:
    started = time.monotonic()
    data = _load_json(args.input)
    ideal = _ideal_arg(data)
    res = find_linear_quotients_order(ideal.generators, budget=args.budget)
    if res.order is not None:
        from .ideals import minimal_generators

        gens = minimal_generators(ideal.generators)
        ordered = [list(gens[i].exponents) for i in res.order]
        return _emit(
            args, "found", OK, _digest(data), started,
            {"order": list(res.order), "generators": ordered}, {"nodes": res.nodes},
        )
    verdict = "exhausted" if res.exhausted else "none"
    return _emit(
        args, verdict, EXHAUSTED if res.exhausted else REFUTED,
        _digest(data), started, None, {"nodes": res.nodes},
    )


def cmd_betti(args) -> int:
    started = time.monotonic()
    data = _load_json(args.input)
    ideal = _ideal_arg(data)
    if args.power > 1:
        ideal = ideal_power(ideal, args.power)
    try:
        table = betti_numbers(ideal, field=args.field)
    except ValueError as exc:
        _fail(str(exc))
    minimal = ideal.minimalized()
    stats = {
        "regularity": table.regularity(),
        "generators": len(minimal.generators),
    }
    if minimal.is_equigenerated() and not minimal.is_zero():
        linear = table.regularity() == minimal.degree
        verdict = "linear" if linear else "not-linear"
        code = OK if linear else REFUTED
    else:
        verdict, code = "computed", OK
    return _emit(
        args, verdict, code, _digest(data), started,
        serialize.betti_to_json(table), stats,
    )


def cmd_check_shelling(args) -> int:
    started = time.monotonic()
    data = _load_json(args.input)
    dd = _complex_arg(data)
    if "order" in data:
        try:
            check = is_shelling_order(dd, [tuple(f) for f in data["order"]])
        except ValueError as exc:
            _fail(str(exc))
        verdict = "shelling" if check.ok else "not-a-shelling"
        return _emit(
            args, verdict, OK if check.ok else REFUTED, _digest(data), started,
            None, {"fail_index": check.fail_index},
        )
    res = find_shelling(dd, budget=args.budget)
    if res.order is not None:
        cert = {"order": [list(f.members) for f in res.order]}
        return _emit(args, "shellable", OK, _digest(data), started, cert,
                     {"nodes": res.nodes})
    verdict = "exhausted" if res.exhausted else "not-shellable"
    return _emit(
        args, verdict, EXHAUSTED if res.exhausted else REFUTED,
        _digest(data), started, None, {"nodes": res.nodes},
    )


def cmd_check_extendable(args) -> int:
    started = time.monotonic()
    data = _load_json(args.input)
    dd = _complex_arg(data)
    try:
        res = is_extendably_shellable(dd)
    except ValueError as exc:
        _fail(str(exc))
    cert = (
        {"stuck_shelling": [list(f.members) for f in res.stuck_order]}
        if res.stuck_order
        else None
    )
    code = {"extendable": OK, "obstructed": REFUTED, "exhausted": EXHAUSTED}[res.status]
    return _emit(args, res.status, code, _digest(data), started, cert,
                 {"states": res.states})


def cmd_simon_verify(args) -> int:
    started = time.monotonic()
    try:
        report = simon_equivalence_check(args.n, args.d)
    except ValueError as exc:
        _fail(str(exc))
    verdict = "equivalent" if report.equivalence_holds else "inequivalent"
    return _emit(
        args, verdict, OK if report.equivalence_holds else REFUTED,
        None, started, report.to_json(), {},
    )


def cmd_recognize(args) -> int:
    started = time.monotonic()
    data = _load_json(args.input)
    if args.kind == "quasiforest":
        dd = _complex_arg(data)
        order = find_leaf_order(dd)
        holds = order is not None
        cert = {"leaf_order": [list(f.members) for f in order.facet_sets]} if order else None
        return _emit(args, "quasiforest" if holds else "not-quasiforest",
                     OK if holds else REFUTED, _digest(data), started, cert, {})
    ideal = _ideal_arg(data)
    checker = {
        "stable": is_squarefree_stable,
        "strongly-stable": is_squarefree_strongly_stable,
        "lex": is_squarefree_lexsegment,
        "matroidal": is_matroidal,
    }[args.kind]
    try:
        verdict = checker(ideal)
    except ValueError as exc:
        _fail(str(exc))
    witness = None
    if verdict.witness is not None:
        u, i = verdict.witness
        witness = {"monomial": list(u.exponents), "variable": i}
    return _emit(
        args, args.kind if verdict.holds else f"not-{args.kind}",
        OK if verdict.holds else REFUTED, _digest(data), started, witness, {},
    )


def cmd_example(args) -> int:
    started = time.monotonic()
    if args.list or args.name is None:
        listing = {name: summary for name, (summary, _) in gallery.INSTANCES.items()}
        print(json.dumps(listing, indent=2))
        return OK
    try:
        outcome = gallery.run_instance(args.name, budget=args.budget)
    except KeyError:
        _fail(f"unknown example {args.name!r}; try --list")
    return _emit(
        args, outcome.verdict, OK if outcome.ok else REFUTED, None, started,
        outcome.details, {"expected_verdicts_hold": outcome.ok},
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=_default_budget(),
                        help="search node budget (env CLUTTERS_BUDGET)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized helpers")
    common.add_argument("--field", default="Q", help="coefficient field: Q, F2, F3, ...")
    common.add_argument("--mode", choices=["greedy", "complete"], default="complete")
    common.add_argument("--threads", type=int, default=1,
                        help="worker pool cap (searches run deterministically)")
    common.add_argument("--output-dir", default=None, help="where to write certificates")

    parser = argparse.ArgumentParser(
        prog="clutters",
        description="exact decisions about uniform clutters and their ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-chordal", parents=[common])
    p.add_argument("input")
    p.set_defaults(fn=cmd_check_chordal)

    p = sub.add_parser("check-decomposable", parents=[common])
    p.add_argument("input")
    p.add_argument("--max-readded", type=int, default=2,
                   help="circuits re-added per thinning chain")
    p.set_defaults(fn=cmd_check_decomposable)

    p = sub.add_parser("check-linear-quotients", parents=[common])
    p.add_argument("input")
    p.set_defaults(fn=cmd_check_linear_quotients)

    p = sub.add_parser("find-lq-order", parents=[common])
    p.add_argument("input")
    p.set_defaults(fn=cmd_find_lq_order)

    p = sub.add_parser("betti", parents=[common])
    p.add_argument("input")
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(fn=cmd_betti)

    p = sub.add_parser("check-shelling", parents=[common])
    p.add_argument("input")
    p.set_defaults(fn=cmd_check_shelling)

    p = sub.add_parser("check-extendable", parents=[common])
    p.add_argument("input")
    p.set_defaults(fn=cmd_check_extendable)

    p = sub.add_parser("simon-verify", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(fn=cmd_simon_verify)

    p = sub.add_parser("recognize", parents=[common])
    p.add_argument("input")
    p.add_argument("--kind", required=True,
                   choices=["stable", "strongly-stable", "lex", "matroidal", "quasiforest"])
    p.set_defaults(fn=cmd_recognize)

    p = sub.add_parser("example", parents=[common])
    p.add_argument("name", nargs="?")
    p.add_argument("--list", action="store_true")
    p.set_defaults(fn=cmd_example)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        _fail("--threads must be at least 1")
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
