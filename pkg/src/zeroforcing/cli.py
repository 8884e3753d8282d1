"""Command-line entry point: ``zeroforcing <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 internal assertion.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import metrics
from .cover import exact_vertex_cover, is_vertex_cover, lm_vertex_cover
from .experiment import (
    PAPER_SCALE,
    ExperimentConfig,
    HarnessError,
    aggregate,
    emit_csv,
    fit_paper_scalings,
    read_csv,
    run_experiment,
)
from .forcing import LmMode, exact_zero_forcing, is_forcing_set, lm_zero_forcing
from .generators import (
    DeactParams,
    PaParams,
    StarSpec,
    gen_deactivation,
    gen_pa,
    gen_stars,
)
from .graph import GraphError, connected_components, read_edgelist, write_edgelist
from .plot import QUANTITIES, emit_plot

log = logging.getLogger("zeroforcing")

EXIT_USAGE, EXIT_IO, EXIT_INTERNAL = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _window(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    return lo, hi


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_generate(args) -> None:
    if args.model == "stars":
        if not args.hub_degrees:
            raise UsageError("--hub-degrees is required for --model stars")
        try:
            g = gen_stars(StarSpec(tuple(args.hub_degrees), args.arrangement))
        except ValueError as exc:
            raise UsageError(str(exc))
    else:
        if args.n is None:
            raise UsageError("--n is required")
        try:
            params = (PaParams if args.model == "pa" else DeactParams)(args.n, args.m, args.a)
        except ValueError as exc:
            raise UsageError(str(exc))
        g = gen_pa(params, args.seed) if args.model == "pa" else gen_deactivation(params, args.seed)
    write_edgelist(g, args.output)
    log.info("wrote %d vertices, %d edges to %s", g.n, g.edge_count(), args.output)


def _exact(oracle, g) -> int:
    try:
        return oracle(g)[0]
    except GraphError as exc:
        raise UsageError(str(exc))


def cmd_zf(args) -> None:
    g = read_edgelist(args.edgelist)
    res = lm_zero_forcing(g, args.mode, trace=args.trace)
    if not is_forcing_set(g, res.zfs):
        raise HarnessError("LM output is not a zero forcing set")
    print(f"Z_LM={res.z_lm} delta_Z={res.delta_z} N={g.n}")
    if args.exact:
        print(f"Z_exact={_exact(exact_zero_forcing, g)}")
    if args.trace:
        for tag, v in res.rule_trace:
            print(f"# {tag} {v}")
    if args.print_set:
        for v in res.zfs:
            print(v)


def cmd_vc(args) -> None:
    g = read_edgelist(args.edgelist)
    res = lm_vertex_cover(g)
    if not is_vertex_cover(g, res.cover):
        raise HarnessError("LM output is not a vertex cover")
    print(f"V_LM={res.v_lm} delta_V={res.delta_v} N={g.n}")
    if args.exact:
        print(f"V_exact={_exact(exact_vertex_cover, g)}")
    if args.print_set:
        for v in res.cover:
            print(v)


def cmd_stats(args) -> None:
    g = read_edgelist(args.edgelist)
    stats = metrics.degree_distribution(g)
    print("degree,count")
    for k, c in stats.histogram.items():
        print(f"{k},{c}")
    try:
        est = metrics.estimate_gamma(stats, args.kmin)
        print(f"# gamma_hat={est.gamma:.4f} stderr={est.stderr:.4f} n_tail={est.n_tail} kmin={args.kmin}")
    except ValueError as exc:
        print(f"# gamma_hat=NA ({exc})")
    print(f"# diameter={metrics.diameter(g, args.diameter)} method={args.diameter}")
    print(f"# components={len(connected_components(g))}")


def cmd_experiment(args) -> None:
    if args.action == "fit":
        if not args.csv or not args.window:
            raise UsageError("experiment fit needs --csv and --window")
        rows = read_csv(args.csv)
        try:
            zfit, vfit = fit_paper_scalings(rows, args.window)
        except ValueError as exc:
            raise UsageError(str(exc))
        print("quantity,slope,intercept,r_squared")
        print(f"1-z,{zfit.slope:.6g},{zfit.intercept:.6g},{zfit.r_squared:.6g}")
        print(f"v,{vfit.slope:.6g},{vfit.intercept:.6g},{vfit.r_squared:.6g}")
        return
    if args.action is not None:
        raise UsageError(f"unknown experiment action {args.action!r}")
    if not args.output:
        raise UsageError("experiment needs -o <csv>")
    overrides = {"master_seed": args.seed, "mode": args.mode, "model": args.model,
                 "n": args.n, "replicas": args.replicas}
    if args.paper_scale:
        overrides.update(PAPER_SCALE)
    if args.no_timing:
        overrides["timing"] = False
    try:
        if args.config:
            cfg = ExperimentConfig.from_json(args.config, **overrides)
        else:
            cfg = ExperimentConfig(**{k: v for k, v in overrides.items() if v is not None})
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad experiment config: {exc}")
    records = run_experiment(cfg, workers=args.workers)
    emit_csv(records, args.output, kind="records")
    if args.summary:
        emit_csv(aggregate(records), args.summary, kind="summary")
    log.info("wrote %d records to %s", len(records), args.output)


def cmd_plot(args) -> None:
    rows = read_csv(args.csv)
    if not rows:
        raise UsageError(f"{args.csv} holds no rows")
    emit_plot(rows, args.quantity, args.output)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="zeroforcing", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="write a random or star graph as an edge list")
    g.add_argument("--model", choices=("pa", "deact", "stars"), required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int, default=2)
    g.add_argument("--a", type=float, default=1.0)
    g.add_argument("--hub-degrees", type=_int_list)
    g.add_argument("--arrangement", choices=("isolated", "string"), default="isolated")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=cmd_generate)

    z = sub.add_parser("zf", help="LM zero forcing set of an edge-list graph")
    z.add_argument("edgelist")
    z.add_argument("--mode", choices=[m.value for m in LmMode], default=LmMode.CLOSURE_CONSISTENT.value)
    z.add_argument("--exact", action="store_true", help="also run the brute-force oracle (<= 16 vertices)")
    z.add_argument("--trace", action="store_true")
    z.add_argument("--print-set", action="store_true", help="print the set, one id per line")
    z.set_defaults(func=cmd_zf)

    c = sub.add_parser("vc", help="LM vertex cover of an edge-list graph")
    c.add_argument("edgelist")
    c.add_argument("--exact", action="store_true")
    c.add_argument("--print-set", action="store_true")
    c.set_defaults(func=cmd_vc)

    s = sub.add_parser("stats", help="degree histogram, exponent, diameter")
    s.add_argument("edgelist")
    s.add_argument("--kmin", type=int, default=8)
    s.add_argument("--diameter", choices=("exact", "two-sweep"), default="two-sweep")
    s.set_defaults(func=cmd_stats)

    e = sub.add_parser("experiment", help="run a seeded sweep, or fit a finished one")
    e.add_argument("action", nargs="?", choices=("fit",))
    e.add_argument("--config")
    e.add_argument("--workers", type=int)
    e.add_argument("-o", "--output")
    e.add_argument("--summary", help="also write the aggregated CSV here")
    e.add_argument("--seed", type=int, help="override master_seed")
    e.add_argument("--model", choices=("pa", "deact"))
    e.add_argument("--n", type=int)
    e.add_argument("--replicas", type=int)
    e.add_argument("--mode", choices=[m.value for m in LmMode])
    e.add_argument("--paper-scale", action="store_true", help="n=10000, 100 replicas")
    e.add_argument("--no-timing", action="store_true", help="write walltime_ms as 0")
    e.add_argument("--csv")
    e.add_argument("--window", type=_window)
    e.set_defaults(func=cmd_experiment)

    pl = sub.add_parser("plot", help="SVG chart of a sweep CSV")
    pl.add_argument("--csv", required=True)
    pl.add_argument("--quantity", choices=tuple(QUANTITIES), required=True)
    pl.add_argument("-o", "--output", required=True)
    pl.set_defaults(func=cmd_plot)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        args.func(args)
    except UsageError as exc:
        print(f"zeroforcing: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, GraphError) as exc:
        print(f"zeroforcing: {exc}", file=sys.stderr)
        return EXIT_IO
    except (HarnessError, AssertionError) as exc:
        print(f"zeroforcing: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return 0


if __name__ == "__main__":
    sys.exit(main())
