"""Benchmark harness: run solvers over an instance directory, emit CSV.

Instances run concurrently in worker processes; records are collected
and written in sorted instance order so output is deterministic.  With
the oracle enabled every solver result is compared against the exact
optimum, and any disagreement writes a reproducer file and aborts.
"""

from __future__ import annotations

import csv
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .exact import solve_exact
from .graph import Instance, parse_instance, serialize_instance
from .stars import solve_stars
from .threshold import solve_threshold

CSV_SCHEMA = "ff-bench-v1"
CSV_COLUMNS = ("name", "algo", "n", "m", "mod_size", "saved", "ms", "explored", "agree")
ALGOS = ("exact", "threshold", "stars")


@dataclass(frozen=True)
class BenchRecord:
    name: str
    algo: str
    n: int
    m: int
    mod_size: int
    saved: int
    ms: float
    explored: int
    agree: bool | None


def run_algo(inst: Instance, algo: str):
    """Dispatch one solver run; FPT algorithms need the instance modulator."""
    g, s = inst.graph, inst.source
    if algo == "exact":
        return solve_exact(g, s, max_n=max(20, g.n))
    if inst.modulator is None:
        raise ValueError(f"algorithm {algo!r} needs a modulator in the instance")
    x_set = inst.modulator - {s}
    if algo == "threshold":
        return solve_threshold(g, s, x_set)
    if algo == "stars":
        return solve_stars(g, s, x_set)
    raise ValueError(f"unknown algorithm {algo!r}")


def _bench_one(args: tuple[str, str, str, bool]) -> tuple:
    name, text, algo, use_oracle = args
    inst = parse_instance(text)
    t0 = time.perf_counter()
    res = run_algo(inst, algo)
    ms = (time.perf_counter() - t0) * 1000.0
    agree = None
    if use_oracle:
        oracle = solve_exact(inst.graph, inst.source, max_n=max(20, inst.graph.n))
        agree = res.best_saved == oracle.best_saved
    m = sum(len(a) for a in inst.graph.adjacency) // 2
    mod_size = len(inst.modulator) if inst.modulator is not None else 0
    return (
        name, algo, inst.graph.n, m, mod_size,
        res.best_saved, round(ms, 3), res.explored, agree,
    )


def bench_dir(
    directory: str | Path,
    algos: list[str],
    use_oracle: bool,
    out_path: str | Path,
    jobs: int | None = None,
) -> list[BenchRecord]:
    """Run every instance file in the directory against every algorithm."""
    directory = Path(directory)
    for algo in algos:
        if algo not in ALGOS:
            raise ValueError(f"unknown algorithm {algo!r}")
    files = sorted(directory.glob("*.ff"))
    if not files:
        raise ValueError(f"no .ff instance files in {directory}")
    tasks = [
        (f.stem, f.read_text(), algo, use_oracle)
        for f in files
        for algo in algos
    ]
    workers = jobs or os.cpu_count() or 1
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_bench_one, tasks))
    else:
        rows = [_bench_one(t) for t in tasks]

    records = [BenchRecord(*row) for row in rows]
    bad = next((r for r in records if r.agree is False), None)
    if bad is not None:
        repro = Path(str(out_path) + ".reproducer.txt")
        inst = parse_instance((directory / f"{bad.name}.ff").read_text())
        repro.write_text(
            f"# disagreement: algo={bad.algo} saved={bad.saved} "
            f"oracle={solve_exact(inst.graph, inst.source, max_n=max(20, inst.graph.n)).best_saved}\n"
            + serialize_instance(inst)
        )
        raise RuntimeError(
            f"oracle disagreement on {bad.name} ({bad.algo}); reproducer at {repro}"
        )

    with open(out_path, "w", newline="") as fh:
        fh.write(f"# schema={CSV_SCHEMA}\n")
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in records:
            agree = "" if r.agree is None else str(r.agree).lower()
            writer.writerow(
                [r.name, r.algo, r.n, r.m, r.mod_size, r.saved, r.ms, r.explored, agree]
            )
    return records
