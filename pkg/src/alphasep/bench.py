"""Batch benchmark runner: CSV results and time-to-target exports."""

from __future__ import annotations

import csv
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .config import SolverConfig
from .graph import Graph, load_graph, threshold
from .oracle import verify_separator
from .solver import SolveReport, solve, solve_multistart

VARIANTS = ("fis", "no-tabu", "tssa-only")

CSV_COLUMNS = [
    "instance",
    "alpha",
    "variant",
    "seed",
    "best_size",
    "time_to_best_s",
    "total_time_s",
    "generations",
    "timeline",
    "f_hat",
    "f_bar",
]


@dataclass(frozen=True)
class RunRecord:
    """One solver execution: a single CSV row."""

    instance: str
    alpha: float
    variant: str
    seed: int
    best_size: int
    time_to_best: float
    total_time: float
    generations: int
    timeline: tuple[tuple[int, float], ...]


def run_variant(g: Graph, variant: str, cfg: SolverConfig) -> SolveReport:
    """Dispatch one run of the named algorithm variant."""
    if variant == "fis":
        return solve(g, cfg)
    if variant == "no-tabu":
        return solve(g, cfg.replace(tabu_enabled=False))
    if variant == "tssa-only":
        return solve_multistart(g, cfg)
    raise ValueError(f"unknown variant '{variant}'; expected one of {VARIANTS}")


def _run_cell(args: tuple) -> RunRecord:
    path, name, alpha, variant, seed, base_cfg = args
    g = load_graph(Path(path).read_text(encoding="utf-8"))
    cfg = base_cfg.replace(alpha=alpha, seed=seed)
    report = run_variant(g, variant, cfg)
    tau = threshold(alpha, g.n)
    if not verify_separator(g, report.best_nodes, tau):
        raise AssertionError(
            f"{name} alpha={alpha} {variant} seed={seed}: best separator "
            "failed independent verification"
        )
    return RunRecord(
        instance=name,
        alpha=alpha,
        variant=variant,
        seed=seed,
        best_size=report.best_size,
        time_to_best=report.time_to_best,
        total_time=report.total_time,
        generations=report.generations,
        timeline=report.timeline,
    )


def run_benchmark(
    instance_paths: Sequence[str | Path],
    alphas: Sequence[float],
    variants: Sequence[str],
    runs: int,
    base_cfg: SolverConfig,
    out_csv: str | Path,
    workers: int = 1,
) -> list[RunRecord]:
    """Execute every (instance, alpha, variant, seed) cell and write the CSV.

    Seeds are base_cfg.seed + run index, so rows are reproducible cell by
    cell.  Cells are independent; workers > 1 runs them in a process pool.
    """
    for v in variants:
        if v not in VARIANTS:
            raise ValueError(f"unknown variant '{v}'; expected one of {VARIANTS}")
    cells = []
    for path in instance_paths:
        path = Path(path)
        if not path.is_file():
            raise FileNotFoundError(f"instance file not found: {path}")
        for alpha in alphas:
            for variant in variants:
                for run in range(runs):
                    cells.append(
                        (
                            str(path),
                            path.stem,
                            alpha,
                            variant,
                            base_cfg.seed + run,
                            base_cfg,
                        )
                    )
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_cell, cells))
    else:
        records = [_run_cell(cell) for cell in cells]
    write_csv(records, out_csv)
    return records


def _group_stats(records: Iterable[RunRecord]) -> dict[tuple, tuple[int, float]]:
    groups: dict[tuple, list[int]] = {}
    for rec in records:
        groups.setdefault((rec.instance, rec.alpha, rec.variant), []).append(
            rec.best_size
        )
    return {
        key: (min(sizes), sum(sizes) / len(sizes)) for key, sizes in groups.items()
    }


def format_timeline(timeline: Iterable[tuple[int, float]]) -> str:
    return ";".join(f"{size}:{t:.3f}" for size, t in timeline)


def parse_timeline(text: str) -> list[tuple[int, float]]:
    if not text:
        return []
    out = []
    for part in text.split(";"):
        size, _, t = part.partition(":")
        out.append((int(size), float(t)))
    return out


def write_csv(records: Sequence[RunRecord], path: str | Path) -> None:
    stats = _group_stats(records)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for rec in records:
            f_hat, f_bar = stats[(rec.instance, rec.alpha, rec.variant)]
            writer.writerow(
                [
                    rec.instance,
                    rec.alpha,
                    rec.variant,
                    rec.seed,
                    rec.best_size,
                    f"{rec.time_to_best:.3f}",
                    f"{rec.total_time:.3f}",
                    rec.generations,
                    format_timeline(rec.timeline),
                    f_hat,
                    f"{f_bar:.2f}",
                ]
            )


def read_csv_rows(path: str | Path) -> list[dict]:
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def first_time_to_target(
    timeline: Sequence[tuple[int, float]], target: int
) -> float | None:
    """Earliest recorded moment the separator size dropped to <= target."""
    for size, t in timeline:
        if size <= target:
            return t
    return None


def ttt_points(times: Sequence[float]) -> list[tuple[float, float]]:
    """Empirical runtime distribution: sorted times with p_i = (i - 0.5) / R."""
    ordered = sorted(times)
    r = len(ordered)
    return [(t, (i - 0.5) / r) for i, t in enumerate(ordered, start=1)]


def ttt_from_csv(
    csv_path: str | Path,
    target: int,
    instance: str | None = None,
    alpha: float | None = None,
    variant: str | None = None,
) -> list[tuple[float, float]]:
    """Collect per-run times to reach the target size and turn them into
    plot points.  Runs that never reach the target are reported and skipped.
    """
    times = []
    skipped = 0
    for row in read_csv_rows(csv_path):
        if instance is not None and row["instance"] != instance:
            continue
        if alpha is not None and abs(float(row["alpha"]) - alpha) > 1e-12:
            continue
        if variant is not None and row["variant"] != variant:
            continue
        t = first_time_to_target(parse_timeline(row["timeline"]), target)
        if t is None:
            skipped += 1
        else:
            times.append(t)
    if skipped:
        print(
            f"ttt: skipped {skipped} run(s) that never reached target {target}",
            file=sys.stderr,
        )
    return ttt_points(times)


def write_ttt(points: Sequence[tuple[float, float]], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for t, p in points:
            fh.write(f"{t:.3f},{p:.6g}\n")
