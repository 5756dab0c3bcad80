"""Command-line interface.

Subcommands: solve one instance, generate random instances, run benchmark
batches, query the exact oracle, and export time-to-target data.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import VARIANTS, run_benchmark, ttt_from_csv, write_ttt
from .config import SolverConfig
from .graph import GraphFormatError, load_graph
from .instances import MODELS, InstanceSpec, write_instance
from .objective import ObjectiveKind
from .oracle import brute_force_min_separator
from .solver import solve, solve_multistart


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="key=value config file")
    parser.add_argument("--theta", type=int, help="population size")
    parser.add_argument("--theta-ref", type=int, help="reference set size")
    parser.add_argument("--theta-elite", type=int, help="elite set size")
    parser.add_argument("--eta", type=float, help="randomized scale factor")
    parser.add_argument("--rho", type=float, help="itemset scale factor")
    parser.add_argument("--xi-max", type=int, help="local search iteration cap")
    parser.add_argument("--gamma", type=float, help="tabu scale factor")
    parser.add_argument("--mu", type=float, help="quality/diversity weight")
    parser.add_argument(
        "--objective",
        choices=[k.value for k in ObjectiveKind],
        help="auxiliary objective (default largest)",
    )
    parser.add_argument(
        "--no-tabu",
        action="store_true",
        help="disable the tabu strategy (ablation variant)",
    )
    parser.add_argument("--time-limit", type=float, help="wall-clock limit, seconds")
    parser.add_argument(
        "--no-time-limit", action="store_true", help="disable the wall-clock stop"
    )
    parser.add_argument(
        "--stagnation-limit",
        type=int,
        help="generations without improvement before stopping",
    )
    parser.add_argument(
        "--no-stagnation-limit",
        action="store_true",
        help="disable the stagnation stop",
    )
    parser.add_argument("--seed", type=int, help="RNG seed")


def _build_config(args: argparse.Namespace, alpha: float) -> SolverConfig:
    """File values first, then explicit flags on top."""
    cfg = SolverConfig.from_file(args.config) if args.config else SolverConfig()
    overrides: dict = {"alpha": alpha}
    for flag, field in [
        ("theta", "theta"),
        ("theta_ref", "theta_ref"),
        ("theta_elite", "theta_elite"),
        ("eta", "eta"),
        ("rho", "rho"),
        ("xi_max", "xi_max"),
        ("gamma", "gamma"),
        ("mu", "mu"),
        ("seed", "seed"),
        ("time_limit", "time_limit"),
        ("stagnation_limit", "stagnation_limit"),
    ]:
        value = getattr(args, flag)
        if value is not None:
            overrides[field] = value
    if args.objective is not None:
        overrides["objective"] = ObjectiveKind(args.objective)
    if args.no_tabu:
        overrides["tabu_enabled"] = False
    if args.no_time_limit:
        overrides["time_limit"] = None
    if args.no_stagnation_limit:
        overrides["stagnation_limit"] = None
    return cfg.replace(**overrides)


def _read_graph(path: Path, one_based: bool):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SystemExit(f"error: cannot read {path}: {exc}")
    return load_graph(text, one_based=one_based)


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph, args.one_based)
    cfg = _build_config(args, args.alpha)
    runner = solve_multistart if args.multistart else solve
    report = runner(g, cfg)
    print(f"best separator size: {report.best_size}")
    print(f"nodes: {' '.join(map(str, report.best_nodes))}")
    print(
        f"time to best: {report.time_to_best:.3f}s  "
        f"total: {report.total_time:.3f}s  generations: {report.generations}"
    )
    if args.out:
        args.out.write_text(report.to_json() + "\n", encoding="utf-8")
        print(f"report written to {args.out}")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = InstanceSpec(n=args.n, p=args.p, seed=args.seed, model=args.model)
    g = write_instance(spec, args.out)
    print(f"wrote {args.out}: n={g.n} m={g.m} ({spec.model}, seed={spec.seed})")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    paths = sorted(
        p
        for p in args.dir.iterdir()
        if p.is_file() and not p.name.endswith(".json")
    )
    if not paths:
        raise SystemExit(f"error: no instance files in {args.dir}")
    alphas = [float(a) for a in args.alphas.split(",") if a]
    variants = [v.strip() for v in args.variants.split(",") if v.strip()]
    cfg = _build_config(args, alphas[0] if alphas else 0.2)
    records = run_benchmark(
        paths, alphas, variants, args.runs, cfg, args.out, workers=args.workers
    )
    print(f"wrote {len(records)} rows to {args.out}")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph, args.one_based)
    size, witness = brute_force_min_separator(g, args.alpha)
    print(f"optimal separator size: {size}")
    print(f"witness: {' '.join(map(str, sorted(witness)))}")
    return 0


def _cmd_ttt(args: argparse.Namespace) -> int:
    points = ttt_from_csv(
        args.csv,
        args.target,
        instance=args.instance,
        alpha=args.alpha,
        variant=args.variant,
    )
    if not points:
        raise SystemExit("error: no runs reached the target")
    write_ttt(points, args.out)
    print(f"wrote {len(points)} points to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphasep",
        description="Minimum alpha-separator solver and benchmark harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one instance")
    p_solve.add_argument("graph", type=Path, help="edge-list file")
    p_solve.add_argument("--alpha", type=float, required=True)
    p_solve.add_argument(
        "--one-based", action="store_true", help="input vertex ids start at 1"
    )
    p_solve.add_argument(
        "--multistart",
        action="store_true",
        help="local-search-only baseline instead of the full search",
    )
    p_solve.add_argument("--out", type=Path, help="write JSON report here")
    _add_config_flags(p_solve)
    p_solve.set_defaults(func=_cmd_solve)

    p_gen = sub.add_parser("gen", help="generate a random instance")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--p", type=float, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--model", choices=MODELS, default="incremental")
    p_gen.add_argument("-o", "--out", type=Path, required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_bench = sub.add_parser("bench", help="run a benchmark batch")
    p_bench.add_argument("--dir", type=Path, required=True, help="instance directory")
    p_bench.add_argument("--alphas", default="0.2,0.4,0.6")
    p_bench.add_argument(
        "--variants", default="fis", help=f"comma list from {','.join(VARIANTS)}"
    )
    p_bench.add_argument("--runs", type=int, default=1)
    p_bench.add_argument("--workers", type=int, default=1)
    p_bench.add_argument("-o", "--out", type=Path, required=True)
    _add_config_flags(p_bench)
    p_bench.set_defaults(func=_cmd_bench)

    p_oracle = sub.add_parser("oracle", help="exact optimum by enumeration (n <= 20)")
    p_oracle.add_argument("graph", type=Path)
    p_oracle.add_argument("--alpha", type=float, required=True)
    p_oracle.add_argument("--one-based", action="store_true")
    p_oracle.set_defaults(func=_cmd_oracle)

    p_ttt = sub.add_parser("ttt", help="export time-to-target points from a CSV")
    p_ttt.add_argument("--csv", type=Path, required=True)
    p_ttt.add_argument("--target", type=int, required=True)
    p_ttt.add_argument("--instance", help="filter by instance name")
    p_ttt.add_argument("--alpha", type=float, help="filter by alpha")
    p_ttt.add_argument("--variant", help="filter by variant")
    p_ttt.add_argument("-o", "--out", type=Path, required=True)
    p_ttt.set_defaults(func=_cmd_ttt)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
