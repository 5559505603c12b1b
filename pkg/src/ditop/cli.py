"""Command-line surface for batch analysis with machine-readable output.

Every verb prints one JSON document on stdout (canonically formatted, so
identical invocations are byte-identical) and reports problems on
stderr.  Exit codes: 0 success, 1 domain-level negative verdict (a
validation report with violations, a failed cover check, a failed
universality suite, deadlocks found), 2 malformed input, 3 exhausted
search budget.  Knobs that shaped a run (depth, budgets, length caps)
are echoed in the output under ``"meta"``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import DitopError, InputError, ResourceLimitError
from . import dihomotopy, dipath, pv
from .precubical import (
    Cell,
    PrecubicalSet,
    complex_from_data,
    complex_to_data,
    load_complex,
    load_morphism,
    validate,
)
from .dicovering import check_dicovering, verdict_to_data
from .unfolding import (
    factor_initial,
    suite_to_data,
    unfold,
    unfolding_to_data,
    universal_property_suite,
)
from .precubical import morphism_to_data, _load_json

DEFAULT_DEPTH = 16
DEFAULT_BUDGET = 1_000_000
DEFAULT_MAX_LEN = 16


def canonical_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def _emit(data) -> None:
    sys.stdout.write(canonical_json(data) + "\n")


def _vertex(space: PrecubicalSet, key: str) -> Cell:
    v = Cell(0, key)
    if v not in space:
        raise InputError(f"{key!r} is not a vertex of the complex")
    return v


def _cmd_validate(args) -> int:
    space = complex_from_data(_load_json(args.file), check=False)
    report = validate(space)
    _emit({
        "valid": not report,
        "violations": [
            {"kind": v.kind, "cell": v.cell.key if v.cell else None, "message": v.message}
            for v in report
        ],
    })
    return 1 if report else 0


def _cmd_paths(args) -> int:
    space = load_complex(args.file)
    a, b = _vertex(space, args.src), _vertex(space, args.dst)
    found = dipath.enumerate_paths(space, a, b, args.max_len)
    _emit({
        "from": a.key,
        "to": b.key,
        "count": len(found),
        "paths": [dipath.path_to_data(p) for p in found],
        "meta": {"max_len": args.max_len},
    })
    return 0


def _cmd_classes(args) -> int:
    space = load_complex(args.file)
    a, b = _vertex(space, args.src), _vertex(space, args.dst)
    class_list = dihomotopy.classes(space, a, b, args.max_len, budget=args.budget)
    data = dihomotopy.classes_to_data(class_list, endpoints=(a, b))
    saturated = any(cls.canonical.length == args.max_len for cls in class_list)
    data["meta"] = {
        "max_len": args.max_len,
        "budget": args.budget,
        "length_bound_saturated": saturated,
    }
    _emit(data)
    return 0


def _cmd_preorder(args) -> int:
    space = load_complex(args.file)
    _emit(dipath.preorder_to_data(dipath.reachability_preorder(space)))
    return 0


def _cmd_unfold(args) -> int:
    space = load_complex(args.file)
    x0 = _vertex(space, args.base)
    u = unfold(space, x0, args.depth)
    data = unfolding_to_data(u)
    data["meta"] = {"depth": args.depth}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(canonical_json(data) + "\n")
    else:
        _emit(data)
    return 0


def _cmd_check_cover(args) -> int:
    projection = load_morphism(args.file)
    basepoint = None
    if args.base is not None:
        basepoint = _vertex(projection.target, args.base)
    verdict = check_dicovering(projection, basepoint=basepoint)
    data = verdict_to_data(verdict)
    data["meta"] = {"basepoint": args.base}
    _emit(data)
    return 0 if verdict else 1


def _cmd_universal(args) -> int:
    space = load_complex(args.file)
    x0 = _vertex(space, args.base)
    catalog = []
    for path in args.against:
        p = load_morphism(path)
        if p.target != space:
            raise InputError(f"{path} does not target the base complex")
        catalog.append(p)
    report = universal_property_suite(
        space, x0, args.depth, catalog, labels=list(args.against),
        node_budget=args.budget,
    )
    data = suite_to_data(report)
    data["meta"] = {"depth": args.depth, "budget": args.budget}
    _emit(data)
    if report.resource_limited:
        return 3
    return 0 if report.passed else 1


def _cmd_pv_compile(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc}") from None
    program = pv.parse(text)
    compiled = pv.build_complex(program)
    data = complex_to_data(compiled.space)
    data["forbidden"] = pv.forbidden_to_data(compiled.forbidden)
    data["meta"] = {"processes": len(program.processes), "resources": dict(program.resources)}
    status = 0
    if args.deadlocks:
        final_key = args.final if args.final is not None else pv.top_corner(program)
        final = _vertex(compiled.space, final_key)
        stuck = pv.deadlocks(compiled.space, final)
        data["final"] = final.key
        data["deadlocks"] = [v.key for v in stuck]
        if stuck:
            status = 1
    _emit(data)
    return status


def _cmd_factor_initial(args) -> int:
    space = load_complex(args.file)
    left, right = factor_initial(space)
    _emit({
        "middle": complex_to_data(right.source),
        "middle_is_empty": right.source.is_empty(),
        "left": morphism_to_data(left),
        "right": morphism_to_data(right),
    })
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ditop",
        description="directed topology over finite precubical sets",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="check a complex file; violations exit 1")
    p.add_argument("file")
    p.set_defaults(run=_cmd_validate)

    p = sub.add_parser("paths", help="enumerate directed paths between two vertices")
    p.add_argument("file")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    p.set_defaults(run=_cmd_paths)

    p = sub.add_parser("classes", help="classify paths up to dihomotopy")
    p.add_argument("file")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(run=_cmd_classes)

    p = sub.add_parser("preorder", help="reachability preorder on vertices")
    p.add_argument("file")
    p.set_defaults(run=_cmd_preorder)

    p = sub.add_parser("unfold", help="universal dicovering, truncated at a depth")
    p.add_argument("file")
    p.add_argument("--base", required=True)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--out")
    p.set_defaults(run=_cmd_unfold)

    p = sub.add_parser("check-cover", help="decide the unique-lifting conditions")
    p.add_argument("file")
    p.add_argument("--base")
    p.set_defaults(run=_cmd_check_cover)

    p = sub.add_parser("universal", help="universality suite against projections")
    p.add_argument("file")
    p.add_argument("--base", required=True)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--against", nargs="+", required=True, metavar="PROJ_FILE")
    p.set_defaults(run=_cmd_universal)

    p_pv = sub.add_parser("pv", help="PV program front end")
    pv_sub = p_pv.add_subparsers(dest="pv_verb", required=True)
    p = pv_sub.add_parser("compile", help="compile a PV program to its state space")
    p.add_argument("file")
    p.add_argument("--deadlocks", action="store_true")
    p.add_argument("--final")
    p.set_defaults(run=_cmd_pv_compile)

    p = sub.add_parser("factor-initial", help="factor the morphism out of the empty complex")
    p.add_argument("file")
    p.set_defaults(run=_cmd_factor_initial)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except ResourceLimitError as exc:
        print(f"ditop: resource limit: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"ditop: {exc}", file=sys.stderr)
        return 2
    except DitopError as exc:
        print(f"ditop: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
