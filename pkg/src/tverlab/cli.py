"""Command-line front end: one subcommand per verifiable claim.

Output is JSON lines with sorted keys and exact "p/q" scalars, written to
stdout or --output.  Runs are deterministic functions of (subcommand,
parameters, seed); --jobs is accepted for interface stability but the
pipeline is sequential and results are emitted in canonical order, so
output bytes never depend on it.

Exit codes: 0 all checks passed; 1 a verified claim was falsified (the
offending record is in the output); 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import conemap, cover, depth, z2
from .rationals import rat, rat_str
from .rng import SplitMix64

PASS, FALSIFIED, USAGE = 0, 1, 2


def _emit(records: List[dict], output: Optional[str]) -> None:
    text = "\n".join(
        json.dumps(r, sort_keys=True, separators=(",", ":")) for r in records
    )
    if text:
        text += "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _point_strs(p) -> list:
    return [rat_str(c) for c in p]


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (exit_code, records)
# ---------------------------------------------------------------------------

def _configs(args, parser) -> List[depth.PointConfig]:
    if args.input:
        with open(args.input) as fh:
            return [depth.PointConfig.from_json(fh.read())]
    if args.d is None or args.r is None:
        parser.error("need --d and --r (or --input)")
    rng = SplitMix64(args.seed)
    n = depth.guaranteed_size(args.d, args.r)
    return [
        depth.random_point_config(args.d, n, rng) for _ in range(args.trials)
    ]


def cmd_centerpoint(args, parser):
    records = []
    ok_all = True
    for i, config in enumerate(_configs(args, parser)):
        cert = depth.centerpoint(config, args.r)
        ok = cert is not None and cert.depth >= args.r
        ok_all &= ok
        records.append(
            {
                "trial": i,
                "n": config.n,
                "point": None if cert is None else _point_strs(cert.point),
                "depth": None if cert is None else cert.depth,
                "r": args.r,
                "ok": ok,
            }
        )
    return (PASS if ok_all else FALSIFIED), records


def cmd_tverberg(args, parser):
    records = []
    ok_all = True
    for i, config in enumerate(_configs(args, parser)):
        cert = depth.tverberg_partition(config, args.r)
        if cert is None:
            ok = False
            rec = {"trial": i, "ok": False, "r": args.r}
        else:
            dep = depth.tukey_depth(cert.point, config)
            ok = depth.check_tverberg_certificate(cert, config) and dep.depth >= args.r
            rec = {
                "trial": i,
                "blocks": [list(b) for b in cert.blocks],
                "point": _point_strs(cert.point),
                "depth": dep.depth,
                "r": args.r,
                "ok": ok,
            }
        ok_all &= ok
        records.append(rec)
    return (PASS if ok_all else FALSIFIED), records


def cmd_reduce(args, parser):
    if args.d is None or args.r is None:
        parser.error("need --d and --r")
    plan = depth.reduction_plan(args.r, args.d)
    records = [
        {
            "plan": {
                "r": plan.r,
                "d": plan.d,
                "k": plan.k,
                "R": plan.R,
                "m": plan.m,
                "M": plan.M,
            }
        }
    ]
    rng = SplitMix64(args.seed)
    ok_all = True
    for i in range(args.trials):
        config = depth.random_point_config(args.d, plan.m + 1, rng)
        try:
            cert = depth.reduce_central_from_tverberg(config, args.r)
            ok = cert.depth >= args.r
            rec = {
                "trial": i,
                "point": _point_strs(cert.point),
                "depth": cert.depth,
                "ok": ok,
            }
        except RuntimeError as exc:
            ok = False
            rec = {"trial": i, "ok": False, "error": str(exc)}
        ok_all &= ok
        records.append(rec)
    return (PASS if ok_all else FALSIFIED), records


def cmd_hind(args, parser):
    if args.input:
        with open(args.input) as fh:
            data = json.load(fh)
        X = z2.Z2Complex(
            z2.SimplicialComplex(data["maximal_simplices"]),
            {int(k): v for k, v in data["involution"].items()},
        )
        value = z2.hind(X)
        return PASS, [{"hind": value}]
    m = args.sphere if args.sphere is not None else args.m
    if m is None:
        parser.error("need --m (sphere dimension) or --input")
    value = z2.hind(z2.cross_polytope_sphere(m))
    ok = value == m
    return (PASS if ok else FALSIFIED), [
        {"sphere": m, "hind": value, "expected": m, "ok": ok}
    ]


def cmd_counterexample(args, parser):
    if args.d is None or args.r is None:
        parser.error("need --d and --r")
    spec = conemap.build_counterexample(args.d, args.r)
    try:
        report = conemap.verify_isolation(spec)
    except conemap.IsolationFailure as exc:
        return FALSIFIED, [{"ok": False, "error": str(exc)}]
    records = [row.to_record() for row in report.rows]
    records.append(
        {
            "summary": {
                "d": args.d,
                "r": args.r,
                "m": spec.m,
                "tuples": len(report.rows),
                "all_isolated": True,
            }
        }
    )
    return PASS, records


def cmd_probe(args, parser):
    if args.d is None or args.r is None:
        parser.error("need --d and --r")
    result = conemap.probe_tverberg_plus_one(args.d, args.r)
    rec = result.to_record()
    rec["ok"] = result.found
    return (PASS if result.found else FALSIFIED), [rec]


def _random_facet_touching(n: int, rng: SplitMix64, extra: int = 2):
    """One barycentric point per facet (that coordinate zero), plus a few
    interior points."""
    pts = []
    for i in range(n + 1):
        weights = [0] * (n + 1)
        for j in range(n + 1):
            if j != i:
                weights[j] = rng.int_between(1, 9)
        total = sum(weights)
        pts.append(tuple(Fraction(w, total) for w in weights))
    for _ in range(extra):
        weights = [rng.int_between(1, 9) for _ in range(n + 1)]
        total = sum(weights)
        pts.append(tuple(Fraction(w, total) for w in weights))
    return pts


def cmd_cover(args, parser):
    if args.input:
        with open(args.input) as fh:
            data = json.load(fh)
        pts = [[rat(c) for c in p] for p in data["barycentric_points"]]
        touches = cover.facet_touching_check(pts)
        n = len(pts[0]) - 1
        cert = cover.min_cover_homothety(
            [cover.barycentric_to_centered(p) for p in pts],
            cover.standard_simplex_body(n),
        )
        rec = cert.to_record()
        rec["touches_all_facets"] = touches
        rec["ok"] = (not touches) or cert.delta >= 1
        return (PASS if rec["ok"] else FALSIFIED), [rec]
    if args.d is None:
        parser.error("need --d (simplex dimension) or --input")
    rng = SplitMix64(args.seed)
    records = []
    ok_all = True
    for i in range(args.trials):
        pts = _random_facet_touching(args.d, rng)
        touches = cover.facet_touching_check(pts)
        cert = cover.min_cover_homothety(
            [cover.barycentric_to_centered(p) for p in pts],
            cover.standard_simplex_body(args.d),
        )
        ok = touches and cert.delta >= 1
        ok_all &= ok
        records.append(
            {
                "trial": i,
                "delta": rat_str(cert.delta),
                "touches_all_facets": touches,
                "ok": ok,
            }
        )
    return (PASS if ok_all else FALSIFIED), records


def cmd_fiber_demo(args, parser):
    if args.d is None:
        parser.error("need --d (source simplex dimension)")
    density = max(1, args.trials)
    records = []
    for label, spec in (
        ("coordinate projection", cover.coordinate_projection_map(args.d)),
        ("constant map", cover.constant_map(args.d)),
    ):
        report = cover.fiber_width_demo(spec, density, label=label)
        records.append(
            {
                "evidence": label,
                "source_dim": report.source_dim,
                "density": report.density,
                "max_delta": rat_str(report.max_delta),
            }
        )
        records.extend(c.to_record() | {"map": label} for c in report.cells)
    return PASS, records


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tverlab",
        description="exact-arithmetic checks for depth, partitions, index, and covering claims",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, trials_default=5):
        p.add_argument("--d", type=int, default=None, help="ambient or simplex dimension")
        p.add_argument("--r", type=int, default=None, help="number of parts / depth target")
        p.add_argument("--m", type=int, default=None, help="simplex or sphere dimension")
        p.add_argument("--seed", type=int, default=0, help="64-bit seed (SplitMix64)")
        p.add_argument("--trials", type=int, default=trials_default, help="trial count or grid density")
        p.add_argument("--input", type=str, default=None, help="input JSON path")
        p.add_argument("--output", type=str, default=None, help="write JSON lines here instead of stdout")
        p.add_argument("--jobs", type=int, default=1, help="accepted for compatibility; output never depends on it")

    handlers = {}
    for name, fn, help_text in (
        ("centerpoint", cmd_centerpoint, "depth >= r certificates on seeded configurations"),
        ("tverberg", cmd_tverberg, "canonical Tverberg partitions with common-point certificates"),
        ("reduce", cmd_reduce, "prime-lift reduction: depth via an R-part partition of the lifted cloud"),
        ("hind", cmd_hind, "Z2 index of cross-polytope spheres (or an --input complex)"),
        ("counterexample", cmd_counterexample, "isolated-face verification for the cone map at m=(d+1)r-2"),
        ("probe", cmd_probe, "common-point witness one dimension up, m=(d+1)r-1"),
        ("cover", cmd_cover, "covering-radius certificates; facet-touching sets need delta >= 1"),
        ("fiber-demo", cmd_fiber_demo, "sampled fiber-width evidence for maps off the simplex"),
    ):
        p = sub.add_parser(name, help=help_text)
        common(p)
        if name == "hind":
            p.add_argument("--sphere", type=int, default=None, help="alias for --m")
        handlers[name] = fn
    parser.set_defaults(_handlers=handlers)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for field in ("trials", "jobs"):
        if getattr(args, field) is not None and getattr(args, field) < 1:
            parser.error(f"--{field} must be at least 1")
    for field in ("d", "r", "m"):
        value = getattr(args, field)
        if value is not None and value < 0:
            parser.error(f"--{field} must be nonnegative")
    try:
        code, records = args._handlers[args.command](args, parser)
    except KeyError as exc:
        parser.error(f"{args.command}: missing input key {exc}")
    except (OSError, ValueError) as exc:
        # Unreadable --input files, malformed JSON, and out-of-range
        # dimensions are usage errors, not falsified checks.
        parser.error(f"{args.command}: {exc}")
    _emit(records, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
