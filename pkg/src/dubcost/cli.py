"""Command-line interface: path queries, curve export, and verification.

All angles are radians unless --degrees is given.  Numeric output carries 12
significant digits; JSON and CSV payloads are byte-stable across runs for
identical flags.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import oracle_verify, regions, worst_case
from .dubins_paths import build_path, sample, shortest_path
from .geometry import PairSpec

GRAPH_CSV_HEADER = "d,dub,case,alpha,beta,attained"


def _sig(x: float) -> float:
    """Round to 12 significant digits for stable serialized output."""
    return float(f"{x:.12g}")


def _emit(record, fmt: str, csv_header: str | None = None):
    rows = record if isinstance(record, list) else [record]
    if fmt == "json":
        print(json.dumps(record, indent=2))
    elif fmt == "csv":
        header = csv_header or ",".join(rows[0].keys())
        print(header)
        for row in rows:
            print(",".join(_csv_cell(row[k]) for k in header.split(",")))
    else:
        for row in rows:
            for k, v in row.items():
                print(f"{k} = {_csv_cell(v)}")


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _angles(args) -> tuple[float, float]:
    scale = math.pi / 180.0 if getattr(args, "degrees", False) else 1.0
    return args.alpha * scale, args.beta * scale


def _cmd_shortest(args) -> int:
    alpha, beta = _angles(args)
    p = PairSpec(args.d, alpha, beta)
    path, total = shortest_path(p)
    record = {
        "d": _sig(p.d),
        "alpha": _sig(p.alpha),
        "beta": _sig(p.beta),
        "word": path.word,
        "segments": [
            {"kind": seg.kind.value, "length": _sig(seg.length)} for seg in path.segments
        ],
        "total_length": _sig(total),
    }
    if args.samples:
        ss = [total * k / (args.samples - 1) if args.samples > 1 else 0.0
              for k in range(args.samples)]
        record["waypoints"] = [
            {"x": _sig(c.x), "y": _sig(c.y), "theta": _sig(c.theta)}
            for c in (sample(path, s, p) for s in ss)
        ]
    if args.format == "csv":
        flat = {k: record[k] for k in ("d", "alpha", "beta", "word", "total_length")}
        for i, seg in enumerate(record["segments"], 1):
            flat[f"kind{i}"] = seg["kind"]
            flat[f"length{i}"] = seg["length"]
        _emit(flat, "csv")
    elif args.format == "text":
        print(f"word = {path.word}")
        print("segments = " + " ".join(
            f"{seg.kind.value}:{seg.length:.12g}" for seg in path.segments))
        print(f"total_length = {total:.12g}")
        if args.samples:
            for w in record.get("waypoints", []):
                print(f"waypoint {w['x']:.12g} {w['y']:.12g} {w['theta']:.12g}")
    else:
        _emit(record, "json")
    return 0


def _cmd_classify(args) -> int:
    alpha, beta = _angles(args)
    p = PairSpec(args.d, alpha, beta)
    label = regions.classify(p)
    from .geometry import center_distances

    cd = center_distances(p)
    record = {
        "d": _sig(p.d),
        "alpha": _sig(p.alpha),
        "beta": _sig(p.beta),
        "case": label.tag,
        "sub": label.sub or "",
        "d_l": _sig(cd.d_l),
        "d_r": _sig(cd.d_r),
        "d_lr": _sig(cd.d_lr),
        "d_rl": _sig(cd.d_rl),
    }
    _emit(record, args.format)
    return 0


def _dub_record(point) -> dict:
    return {
        "d": _sig(point.d),
        "dub": _sig(point.dub),
        "case": point.active_case,
        "alpha": _sig(point.witness[0]),
        "beta": _sig(point.witness[1]),
        "attained": point.attained,
    }


def _cmd_dub(args) -> int:
    _emit(_dub_record(worst_case.dub(args.d)), args.format, GRAPH_CSV_HEADER)
    return 0


def _cmd_graph(args) -> int:
    if not (0.0 <= args.dmin < args.dmax) or args.step <= 0.0:
        print("graph needs 0 <= dmin < dmax and step > 0", file=sys.stderr)
        return 2
    count = int(math.floor((args.dmax - args.dmin) / args.step + 1e-9)) + 1
    rows = [_dub_record(worst_case.dub(args.dmin + k * args.step)) for k in range(count)]
    _emit(rows, args.format, GRAPH_CSV_HEADER)
    return 0


def _cmd_verify(args) -> int:
    ids = None if args.suite == "all" else [args.suite]
    if ids is not None and ids[0] not in oracle_verify.LEMMA_CHECKS:
        known = ", ".join(oracle_verify.LEMMA_CHECKS)
        print(f"unknown suite {args.suite!r}; choose one of: all, {known}", file=sys.stderr)
        return 2
    reports = oracle_verify.lemma_suite(args.seed, args.samples, ids, grid=args.grid)
    records = [
        {
            "lemma_id": r.lemma_id,
            "samples": r.samples,
            "violations": r.violations,
            "worst_margin": _sig(r.worst_margin),
        }
        for r in reports
    ]
    total = sum(r.violations for r in reports)
    if args.format == "json":
        print(json.dumps({"reports": records, "violations": total}, indent=2))
    else:
        for r in records:
            status = "PASS" if r["violations"] == 0 else "FAIL"
            print(f"{status} {r['lemma_id']}: samples={r['samples']} "
                  f"violations={r['violations']} worst_margin={r['worst_margin']:.6g}")
        print(f"{'PASS' if total == 0 else 'FAIL'} total violations={total}")
    return 0 if total == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dubcost",
        description="Shortest bounded-curvature paths and the worst-case "
                    "excess over straight-line distance.",
        epilog="Angles are radians (see --degrees where offered). "
               "The DUBINS_DSTAR environment variable overrides the computed "
               "plateau breakpoint.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_fmt(sp):
        sp.add_argument("--format", choices=("json", "csv", "text"), default="json")

    sp = sub.add_parser("shortest", help="shortest path between two headings")
    sp.add_argument("--d", type=float, required=True)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--beta", type=float, required=True)
    sp.add_argument("--samples", type=int, default=0, help="emit this many waypoints")
    sp.add_argument("--degrees", action="store_true", help="angles given in degrees")
    add_fmt(sp)
    sp.set_defaults(fn=_cmd_shortest)

    sp = sub.add_parser("classify", help="existence case A/B/C for a heading pair")
    sp.add_argument("--d", type=float, required=True)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--beta", type=float, required=True)
    sp.add_argument("--degrees", action="store_true")
    add_fmt(sp)
    sp.set_defaults(fn=_cmd_classify)

    for name in ("dub", "worst"):
        sp = sub.add_parser(name, help="worst-case excess at one distance")
        sp.add_argument("--d", type=float, required=True)
        add_fmt(sp)
        sp.set_defaults(fn=_cmd_dub)

    sp = sub.add_parser("graph", help="table of the worst-case curve")
    sp.add_argument("--dmin", type=float, required=True)
    sp.add_argument("--dmax", type=float, required=True)
    sp.add_argument("--step", type=float, required=True)
    add_fmt(sp)
    sp.set_defaults(fn=_cmd_graph)

    sp = sub.add_parser("verify", help="run the numerical verification suites")
    sp.add_argument("--suite", default="all")
    sp.add_argument("--samples", type=int, default=10000)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--grid", type=int, default=301, help="grid resolution for grid-backed checks")
    add_fmt(sp)
    sp.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
