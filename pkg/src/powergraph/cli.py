"""Command-line front end.

Exit codes: 0 success, 1 mismatch found, 2 usage or parse error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import checks, engine, literals, perm
from . import predictors as pr
from . import witness as W
from .analysis import analyze
from .catalog import catalog, order_of
from .groups import CapExceeded, EncodingError, make_group
from .groupspec import SpecError, parse
from .report import Cache, ReportRecord, RunConfig, to_csv, to_table

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--max-order", type=int, default=RunConfig.max_order,
                   help="largest group order to build (default %(default)s)")
    p.add_argument("--diameter-cap", type=int, default=RunConfig.diameter_cap,
                   help="exact all-pairs diameter up to this order; sampled above")
    p.add_argument("--samples", type=int, default=RunConfig.samples,
                   help="BFS sources for the sampled diameter lower bound")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true", help="include wall times (non-deterministic)")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output")
    fmt.add_argument("--csv", action="store_true", help="CSV output")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="powergraph", description=(
        "Connectivity of proper power graphs of finite groups."))
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="components, census, diameter, predictions")
    a.add_argument("spec")
    a.add_argument("--diameter", action="store_true")
    a.add_argument("--census", action="store_true")

    c = sub.add_parser("components", parents=[common], help="component count and sizes")
    c.add_argument("spec")
    c.add_argument("--method", choices=["prime", "baseline"], default="prime")
    c.add_argument("--dump", action="store_true", help="print the adjacency (|G| <= 200)")

    d = sub.add_parser("distance", parents=[common], help="BFS distance between two elements")
    d.add_argument("spec")
    d.add_argument("x")
    d.add_argument("y")

    di = sub.add_parser("diameter", parents=[common], help="diameter (exact or sampled lower bound)")
    di.add_argument("spec")

    p = sub.add_parser("predict", parents=[common], help="evaluate a closed-form count")
    p.add_argument("family", choices=sorted(pr.FAMILIES))
    p.add_argument("params", nargs="+")
    p.add_argument("--reading", choices=pr.READINGS, default="statement",
                   help="alternating formulas: as stated, or as derived in the argument")

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("check", help="check id or 'all' (see 'verify list')")
    v.add_argument("--count", type=int, default=1000, help="instances per witness operation")

    w = sub.add_parser("witness", parents=[common], help="print an explicit path")
    w.add_argument("lemma", choices=sorted(W.LEMMAS))
    w.add_argument("where", help="degree n, or a group spec for 'coprime'")
    w.add_argument("elements", nargs="+")

    sub.add_parser("catalog", parents=[common], help="list the small-group catalog")
    return ap


def _config(args) -> RunConfig:
    try:
        return RunConfig(max_order=args.max_order, diameter_cap=args.diameter_cap,
                         samples=args.samples, threads=args.threads, cache_dir=args.cache_dir,
                         seed=args.seed, timings=args.timings)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(records: list[ReportRecord], args, out) -> None:
    if args.csv:
        out.write(to_csv(records))
    elif args.json or len(records) != 1:
        for r in records:
            out.write(r.dumps() + "\n")
    else:
        out.write(to_table(records[0]) + "\n")


def _group(args, cfg: RunConfig):
    return make_group(parse(args.spec), cfg.max_order)


def cmd_analyze(args, cfg, out) -> int:
    rec = analyze(args.spec, cfg, diameter=args.diameter, with_census=args.census,
                  cache=Cache(cfg.cache_dir))
    _emit([rec], args, out)
    return EXIT_MISMATCH if rec.mismatch else EXIT_OK


def cmd_components(args, cfg, out) -> int:
    G = _group(args, cfg)
    pg = engine.graph(G, cfg.threads)
    s = pg.components(args.method)
    rec = ReportRecord(spec=str(G.spec), order=G.order, components=s.count,
                       sizes_histogram=s.sizes_histogram,
                       representatives=[literals.to_json(G, r) for r in s.representatives[:20]])
    _emit([rec], args, out)
    if args.dump:
        if G.order > 200:
            raise UsageError("--dump is limited to groups of order <= 200")
        for v in range(pg.n):
            nb = sorted(int(w) for w in pg.neighbor_ids(v))
            out.write(literals.format_element(G, pg.element(v)) + ": "
                      + " ".join(literals.format_element(G, pg.element(w)) for w in nb) + "\n")
    return EXIT_OK


def _fmt_dist(d) -> str | int:
    return "inf" if d == math.inf else d


def cmd_distance(args, cfg, out) -> int:
    G = _group(args, cfg)
    x = literals.parse_element(G, args.x)
    y = literals.parse_element(G, args.y)
    d = engine.distance(G, x, y, cap=cfg.diameter_cap)
    if args.json:
        out.write(json.dumps({"spec": str(G.spec), "x": args.x, "y": args.y,
                              "distance": _fmt_dist(d)}, sort_keys=True) + "\n")
    else:
        out.write(f"{_fmt_dist(d)}\n")
    return EXIT_OK


def cmd_diameter(args, cfg, out) -> int:
    G = _group(args, cfg)
    r = engine.graph(G, cfg.threads).diameter(cfg.diameter_cap, cfg.samples, cfg.seed)
    rec = ReportRecord(spec=str(G.spec), order=G.order, diameter=r.value, lower_bound=r.lower_bound)
    _emit([rec], args, out)
    return EXIT_OK


def _ints(params: list[str]) -> list[int]:
    try:
        return [int(x) for x in params]
    except ValueError:
        raise UsageError(f"integer parameters expected, got {params}") from None


def _bools_and_ints(params: list[str]) -> list:
    out = []
    for x in params:
        lx = x.lower()
        if lx in ("true", "yes", "pgroup", "qgroup"):
            out.append(True)
        elif lx in ("false", "no"):
            out.append(False)
        else:
            out.extend(_ints([x]))
    return out


def cmd_predict(args, cfg, out) -> int:
    fn = pr.FAMILIES[args.family]
    try:
        if args.family == "alternating":
            (n,) = _ints(args.params)
            p = fn(n, args.reading)
        elif args.family in ("frobenius", "hughes-thompson"):
            p = fn(*_bools_and_ints(args.params))
        else:
            p = fn(*_ints(args.params))
    except TypeError:
        raise UsageError(f"wrong number of parameters for {args.family}") from None
    if args.json:
        out.write(json.dumps(p.to_json(), sort_keys=True) + "\n")
    else:
        cases = ", ".join(c.tag for c in p.cases) or "none"
        agree = "" if len(p.cases) < 2 else ("  agree" if p.agree else "  DISAGREE: " + ", ".join(
            f"{c.tag}={c.value}" for c in p.cases))
        out.write(f"{p.display()}  cases [{cases}]{agree}\n")
    return EXIT_OK


def cmd_verify(args, cfg, out) -> int:
    if args.check == "list":
        for cid, (summary, _) in checks.REGISTRY.items():
            out.write(f"{cid:<24}{summary}\n")
        return EXIT_OK
    if args.check != "all" and args.check not in checks.REGISTRY:
        raise UsageError(f"unknown check id {args.check!r}; try 'verify list'")
    ids = list(checks.REGISTRY) if args.check == "all" else [args.check]
    bad = False
    records = []
    for cid in ids:
        fn = checks.REGISTRY[cid][1]
        gen = fn(cfg, count=args.count) if cid == "witness-validity" else fn(cfg)
        for rec in gen:
            bad |= rec.mismatch
            if args.csv:
                records.append(rec)
            else:
                out.write(rec.dumps() + "\n")
                out.flush()
    if args.csv:
        out.write(to_csv(records))
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_witness(args, cfg, out) -> int:
    fn, nargs, _ = W.LEMMAS[args.lemma]
    if len(args.elements) != nargs:
        raise UsageError(f"{args.lemma} takes {nargs} element argument(s)")
    if args.lemma == "coprime":
        G = make_group(parse(args.where), cfg.max_order)
        elems = [literals.parse_element(G, e) for e in args.elements]
        w = fn(G, *elems)
        fmt = lambda a: literals.format_element(G, a)  # noqa: E731
    else:
        try:
            n = int(args.where)
        except ValueError:
            raise UsageError(f"degree expected, got {args.where!r}") from None
        try:
            elems = [perm.parse_cycles(e, n) for e in args.elements]
        except ValueError as exc:
            raise EncodingError(str(exc)) from None
        w = fn(n, *elems)
        fmt = perm.format_cycles
    if args.json:
        out.write(json.dumps({"lemma": args.lemma, "length": w.length, "bound": w.bound,
                              "path": [fmt(v) for v in w]}) + "\n")
    else:
        for v in w:
            out.write(fmt(v) + "\n")
    return EXIT_OK


def cmd_catalog(args, cfg, out) -> int:
    specs = catalog(cfg.max_order)
    if args.json:
        for s in specs:
            out.write(json.dumps({"spec": s, "order": order_of(s)}) + "\n")
    else:
        for s in specs:
            out.write(f"{s:<20}{order_of(s)}\n")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "components": cmd_components,
    "distance": cmd_distance,
    "diameter": cmd_diameter,
    "predict": cmd_predict,
    "verify": cmd_verify,
    "witness": cmd_witness,
    "catalog": cmd_catalog,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg, out)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, SpecError, EncodingError, W.WitnessError, pr.PredictionError,
            engine.IdentityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
