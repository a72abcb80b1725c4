"""Command-line surface: build and inspect single pairs, run verification
suites, and survey the sl2-embedding classification.

Exit codes: 0 all checks pass, 1 a mathematical check failed (the payload
carries the counterexample), 2 usage or parse error, 3 resource bound.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import surveys
from .diagrams import ParseError, ResourceError, parse
from .diagrams import ShapeError as DiagramShapeError
from .linalg import Matrix
from .pairs import (
    ShapeError,
    biexponents,
    build_pair,
    centralizer,
    centralizer_bigraded,
    classify_pair,
    limit_space,
    ad_pair_operators,
    weak_lefschetz_report,
)
from .surveys import ResourceLimit, RunConfig


def canonical_json(payload):
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(payload, config):
    if config.output_format == "json":
        text = canonical_json(payload)
    else:
        text = _as_table(payload)
    if config.out_path:
        with open(config.out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _as_table(payload, indent=0):
    lines = []

    def walk(obj, depth):
        pad = "  " * depth
        if isinstance(obj, dict):
            for k in sorted(obj):
                v = obj[k]
                if isinstance(v, (dict, list)) and v and not _is_flat(v):
                    lines.append(f"{pad}{k}:")
                    walk(v, depth + 1)
                else:
                    lines.append(f"{pad}{k}: {_flat(v)}")
        elif isinstance(obj, list):
            for item in obj:
                if isinstance(item, (dict, list)) and item and not _is_flat(item):
                    lines.append(f"{pad}-")
                    walk(item, depth + 1)
                else:
                    lines.append(f"{pad}- {_flat(item)}")
        else:
            lines.append(f"{pad}{_flat(obj)}")

    walk(payload, indent)
    return "\n".join(lines) + "\n"


def _is_flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _flat(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)


def build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("table", "json"), default="table")
    shared.add_argument("--out", default=None)
    shared.add_argument("--jobs", type=int, default=1)
    top = argparse.ArgumentParser(prog="nilpair")
    sub = top.add_subparsers(dest="command", required=True)

    p_pair = sub.add_parser(
        "pair", help="inspect the pair of one diagram", parents=[shared]
    )
    p_pair.add_argument(
        "action",
        choices=("build", "centralizer", "biexponents", "classify", "lefschetz", "limits"),
    )
    p_pair.add_argument("--diagram", required=True)

    p_ver = sub.add_parser("verify", help="run a verification suite", parents=[shared])
    p_ver.add_argument(
        "suite",
        choices=("structure", "skew", "cohomology", "multiplicity", "harmonics"),
    )
    p_ver.add_argument("--diagram", default=None)
    p_ver.add_argument("--all", type=int, default=None, metavar="N")
    p_ver.add_argument("--lambda", dest="highest_weight", default=None)
    p_ver.add_argument("--mu", default=None)
    p_ver.add_argument("--alt-positive-system", action="store_true")

    p_rect = sub.add_parser(
        "rect", help="survey the sl2-embedding classification", parents=[shared]
    )
    p_rect.add_argument("algebra", choices=("sl", "sp", "so"))
    p_rect.add_argument("bound", type=int)
    return top


def cmd_pair(args, config):
    pair, h = build_pair(parse(args.diagram))
    if args.action == "build":
        payload = pair.to_jsonable()
        payload.update(h.to_jsonable())
        return payload, True
    if args.action == "centralizer":
        blocks = centralizer_bigraded(pair, h, "sl")
        return {
            "dim_sl": centralizer(pair, "sl", h=h).dim,
            "dim_gl": centralizer(pair, "gl", h=h).dim,
            "bidegrees": [[p, q, sp.dim] for (p, q), sp in sorted(blocks.items())],
        }, True
    if args.action == "biexponents":
        return {"biexponents": [list(e) for e in biexponents(pair, h)]}, True
    if args.action == "classify":
        return {"class": classify_pair(pair, h)}, True
    if args.action == "lefschetz":
        rows = weak_lefschetz_report(pair, h)
        return {"rows": rows, "ok": all(r["ok"] for r in rows)}, all(
            r["ok"] for r in rows
        )
    if args.action == "limits":
        n = pair.n
        cartan = [Matrix.unit(n, i, i).flatten() for i in range(n)]
        from .linalg import Subspace

        lim = limit_space(ad_pair_operators(pair), Subspace(n * n, cartan))
        zgl = centralizer(pair, "gl", h=h)
        return {
            "limit_of_diagonals_dim": lim.dim,
            "equals_centralizer": lim == zgl,
        }, lim == zgl
    raise AssertionError


def cmd_verify(args, config):
    if (args.diagram is None) == (args.all is None):
        raise UsageError("give exactly one of --diagram or --all N")
    if args.suite == "multiplicity":
        if args.diagram is not None:
            if args.highest_weight is None:
                raise UsageError("--lambda is required with --diagram")
            lam = tuple(int(x) for x in args.highest_weight.split(","))
            rep = surveys.multiplicity_checks_for(
                args.diagram, lam, alt=args.alt_positive_system
            )
            rep["ok"] = rep["equal_at_dominant"] and rep["classical_specialization"]
            return rep, rep["ok"]
        config_bound = args.all
        rep = surveys.multiplicity_suite(config_bound, jobs=config.jobs)
        return rep, rep["ok"]
    if args.diagram is not None:
        check = {
            "structure": surveys.structure_checks,
            "skew": surveys.skew_checks,
            "cohomology": surveys.cohomology_checks,
            "harmonics": surveys.harmonics_checks,
        }[args.suite]
        rep = check(parse(args.diagram))
        return rep, rep["ok"]
    bound = args.all
    config.max_boxes = bound
    config.check_bounds()
    if args.suite == "structure":
        rep = surveys.structure_suite(bound, jobs=config.jobs)
    elif args.suite == "skew":
        rep = surveys.skew_suite(min(bound, 7), jobs=config.jobs)
    elif args.suite == "cohomology":
        rep = surveys.cohomology_suite(bound, jobs=config.jobs)
    else:
        rep = surveys.harmonics_suite(
            min(bound, 5), common_bound=8 if bound >= 5 else bound, jobs=config.jobs
        )
    return rep, rep["ok"]


def cmd_rect(args, config):
    if args.bound > 24:
        raise ResourceLimit(f"dimension bound {args.bound} over the limit 24")
    rep = surveys.rect_suite(dim_bound=args.bound, algebras=(args.algebra,))
    return rep, rep["ok"]


class UsageError(ValueError):
    pass


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    config = RunConfig(
        output_format=args.format,
        jobs=args.jobs,
        out_path=args.out,
        alt_positive_system=getattr(args, "alt_positive_system", False),
    )
    try:
        if args.command == "pair":
            payload, ok = cmd_pair(args, config)
        elif args.command == "verify":
            payload, ok = cmd_verify(args, config)
        else:
            payload, ok = cmd_rect(args, config)
    except (ParseError, ShapeError, DiagramShapeError, UsageError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ResourceError, ResourceLimit) as exc:
        sys.stderr.write(f"resource bound: {exc}\n")
        return 3
    _emit(payload, config)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
