"""Command-line interface.

Subcommands:

- ``generate``   — write random instance files (edge list, coordinates
  sidecar for geometric graphs, weighted format for weighted graphs).
- ``solve``      — run one algorithm on one instance, write a solution file.
- ``experiment`` — run an instances x repeats batch, write CSV, print the
  aggregate table.
- ``lowerbound`` — emit the LP relaxation for an external solver.
- ``clusters``   — group vertices around a dominating set, export DOT.

Exit codes: 0 success (for ``solve``: valid dominating set), 1 failed
validation or I/O, 2 usage errors.
"""

from __future__ import annotations

import argparse
import sys
from time import perf_counter
from typing import List, Optional

from .aco import AcoConfig, aco_run
from .clusters import assign_clusters, to_dot
from .experiments import (
    ALGORITHMS,
    ExperimentSpec,
    aggregate,
    format_aggregate,
    run_experiment,
    write_csv,
)
from .generators import (
    BAParams,
    UnitDiskParams,
    WeightedRandomParams,
    gen_ba,
    gen_unit_disk,
    gen_weighted_random,
)
from .graph import (
    Graph,
    GraphFormatError,
    is_dominating_set,
    load_graph,
    read_solution,
    write_edge_list,
    write_solution,
    write_weighted_instance,
)
from .greedy import greedy_mds, greedy_mwds
from .lp import emit_lp, ingest_bound, read_bound_file
from .msrls import MsrlsoConfig, msrlso_run
from .order_search import RlsoConfig, rlso_run
from .rng import Xoshiro256StarStar, child_seed

__all__ = ["main"]


def _add_load_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=["edge-list", "dimacs", "weighted"],
        default=None,
        help="input format (default: sniffed from content)",
    )


def _add_solver_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--algo", required=True, choices=ALGORITHMS)
    p.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")
    p.add_argument(
        "--max-iters", type=int, default=None, help="iteration cap (rlso)"
    )
    p.add_argument(
        "--max-evals", type=int, default=None, help="evaluation cap (aco-*)"
    )
    p.add_argument(
        "--max-cycles", type=int, default=None, help="restart cap (msrlso)"
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--lower-bound",
        type=float,
        default=None,
        help="stop when the incumbent reaches this bound",
    )
    p.add_argument(
        "--lower-bound-file",
        default=None,
        metavar="PATH",
        help="read the bound from a file holding one number",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domset",
        description="Dominating-set heuristics: generation, solving, experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write random instance files")
    g.add_argument("--model", required=True, choices=["unit-disk", "ba", "weighted"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--grid", type=float, default=1000.0, help="square side (unit-disk)")
    g.add_argument("--range", type=float, default=150.0, dest="range_", help="edge threshold (unit-disk)")
    g.add_argument("--w", type=int, default=2, help="edges per arrival (ba)")
    g.add_argument("--m", type=int, default=None, help="edge count (weighted)")
    g.add_argument("--lo", type=int, default=20, help="min weight (weighted uniform)")
    g.add_argument("--hi", type=int, default=70, help="max weight (weighted uniform)")
    g.add_argument("--scheme", choices=["uniform", "deg2"], default="uniform")
    g.add_argument("--count", type=int, default=1, help="number of instances")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True, metavar="PREFIX", help="output path prefix")

    s = sub.add_parser("solve", help="run one algorithm on one instance")
    s.add_argument("instance")
    _add_load_opts(s)
    _add_solver_opts(s)
    s.add_argument("--out", default=None, metavar="PATH", help="solution file")

    e = sub.add_parser("experiment", help="run a batch and write CSV")
    e.add_argument("instances", nargs="+", metavar="INSTANCE")
    _add_load_opts(e)
    _add_solver_opts(e)
    e.add_argument("--repeats", type=int, default=1)
    e.add_argument("--jobs", type=int, default=None, help="worker processes")
    e.add_argument("--out", default=None, metavar="CSV", help="results file")
    e.add_argument(
        "--no-bound-files",
        action="store_true",
        help="ignore <instance>.bound sidecar files",
    )

    l = sub.add_parser("lowerbound", help="emit the LP relaxation")
    l.add_argument("instance")
    _add_load_opts(l)
    l.add_argument("--out", default=None, metavar="PATH", help="LP file (default stdout)")

    c = sub.add_parser("clusters", help="cluster vertices around a dominating set")
    c.add_argument("instance")
    c.add_argument("solution", help="solution file (one member per line)")
    _add_load_opts(c)
    c.add_argument("--out", default=None, metavar="PATH", help="DOT file (default stdout)")
    return parser


def _cmd_generate(args) -> int:
    for k in range(args.count):
        seed = child_seed(args.seed, k)
        coords = None
        if args.model == "unit-disk":
            p = UnitDiskParams(n=args.n, grid_side=args.grid, range_=args.range_, seed=seed)
            g, coords = gen_unit_disk(p)
        elif args.model == "ba":
            p = BAParams(n=args.n, w_edges=args.w, seed=seed)
            g = gen_ba(p)
        else:
            if args.m is None:
                raise SystemExit("generate --model weighted requires --m")
            scheme = ("degree-squared",) if args.scheme == "deg2" else ("uniform", args.lo, args.hi)
            p = WeightedRandomParams(n=args.n, m=args.m, weight_scheme=scheme, seed=seed)
            g = gen_weighted_random(p)
        path = f"{args.out}_{k:02d}.txt"
        if args.model == "weighted":
            write_weighted_instance(g, path)
        else:
            write_edge_list(g, path)
        print(path)
        if coords is not None:
            side = f"{args.out}_{k:02d}.xy"
            with open(side, "w", encoding="utf-8") as fh:
                for i, (x, y) in enumerate(coords):
                    fh.write(f"{i} {x!r} {y!r}\n")
            print(side)
    return 0


def _resolve_cli_bound(args) -> Optional[float]:
    if args.lower_bound is not None and args.lower_bound_file is not None:
        raise SystemExit("--lower-bound and --lower-bound-file are mutually exclusive")
    if args.lower_bound is not None:
        return args.lower_bound
    if args.lower_bound_file is not None:
        return read_bound_file(args.lower_bound_file)
    return None


def _solve_once(g: Graph, args, bound: Optional[float]):
    """Run the selected algorithm once; returns (solution, evals, stop_reason)."""
    algo = args.algo
    if algo == "greedy":
        rng = Xoshiro256StarStar(args.seed)
        sol = greedy_mwds(g, rng) if g.weights is not None else greedy_mds(g, rng)
        return sol, 1, "completed"
    if algo == "rlso":
        lb = None if bound is None else int(ingest_bound(bound, "mds"))
        cfg = RlsoConfig(
            time_limit=args.time_limit,
            max_iterations=args.max_iters,
            lower_bound=lb,
            seed=args.seed,
        )
        trace = rlso_run(g, cfg)
    elif algo == "msrlso":
        kwargs = {} if args.max_cycles is None else {"max_cycles": args.max_cycles}
        cfg = MsrlsoConfig(
            time_limit=args.time_limit,
            lower_bound=None if bound is None else float(bound),
            seed=args.seed,
            **kwargs,
        )
        trace = msrlso_run(g, cfg)
    else:
        lb = None if bound is None else int(ingest_bound(bound, "mds"))
        cfg = AcoConfig(
            variant=algo[4:],
            time_limit=args.time_limit,
            max_evaluations=args.max_evals,
            lower_bound=lb,
            seed=args.seed,
        )
        trace = aco_run(g, cfg)
    return trace.final, trace.evaluations, trace.stop_reason


def _cmd_solve(args) -> int:
    g = load_graph(args.instance, fmt=args.format)
    bound = _resolve_cli_bound(args)
    t0 = perf_counter()
    try:
        sol, evals, reason = _solve_once(g, args, bound)
    except ValueError as exc:
        raise SystemExit(f"invalid configuration: {exc}")
    elapsed = perf_counter() - t0
    valid = is_dominating_set(g, sol.members)
    value = sol.weight if g.weights is not None else sol.size
    print(f"instance: {args.instance}")
    print(f"algorithm: {args.algo}")
    print(f"best: {value}")
    print(f"evaluations: {evals}")
    print(f"elapsed_s: {elapsed:.3f}")
    print(f"stop_reason: {reason}")
    print(f"dominating: {'yes' if valid else 'no'}")
    if args.out:
        write_solution(
            sol,
            args.out,
            header={
                "instance": args.instance,
                "algorithm": args.algo,
                "size": sol.size,
                "weight": sol.weight,
            },
        )
        print(f"solution written to {args.out}")
    return 0 if valid else 1


def _cmd_experiment(args) -> int:
    try:
        spec = ExperimentSpec(
            instances=list(args.instances),
            algorithm=args.algo,
            repeats=args.repeats,
            time_limit=args.time_limit,
            max_iterations=args.max_iters,
            max_evaluations=args.max_evals,
            max_cycles=args.max_cycles,
            lower_bound=args.lower_bound,
            use_bound_files=not args.no_bound_files,
            base_seed=args.seed,
        )
    except ValueError as exc:
        raise SystemExit(f"invalid experiment spec: {exc}")
    if args.lower_bound_file is not None:
        spec.lower_bound = read_bound_file(args.lower_bound_file)
    records = run_experiment(spec, jobs=args.jobs)
    if args.out:
        write_csv(records, args.out)
        print(f"wrote {len(records)} records to {args.out}")
    print(format_aggregate(aggregate(records)))
    errors = sum(1 for r in records if r.stop_reason == "error")
    return 1 if errors else 0


def _cmd_lowerbound(args) -> int:
    g = load_graph(args.instance, fmt=args.format)
    text = emit_lp(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"LP written to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_clusters(args) -> int:
    g = load_graph(args.instance, fmt=args.format)
    sol = read_solution(g, args.solution)
    try:
        clusters = assign_clusters(g, sol)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = to_dot(g, clusters)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"DOT written to {args.out} ({len(clusters)} clusters)")
    else:
        sys.stdout.write(text)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "experiment":
            return _cmd_experiment(args)
        if args.command == "lowerbound":
            return _cmd_lowerbound(args)
        return _cmd_clusters(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(f"error: {exc.code}", file=sys.stderr)
            return 2
        raise
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
