"""Command-line front end.

Exit codes: 0 for success (and "yes"-style answers), 1 for "no"-style
answers (invalid strategy, no modulator within budget), 2 for input
errors (bad files, bad flags, precondition violations).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import ALGOS, bench_dir, run_algo
from .engine import simulate, strategy_from_text, strategy_to_text
from .generators import PLANTED_TAGS, gen_planted, gen_random
from .graph import CLASS_TAGS, Instance, parse_instance, serialize_instance
from .kernel import kernelize
from .modulators import find_clique_modulator, find_modulator
from .reductions import (
    reduce_clique_to_diameter2,
    reduce_clique_to_split,
    reduce_cliqueVC_to_stars,
)

REDUCTION_KINDS = ("diam2", "split", "stars-ppt")


def _load(path: str) -> Instance:
    return parse_instance(Path(path).read_text())


def _emit_instance(inst: Instance, out: str | None) -> None:
    text = serialize_instance(inst)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_vertices(text: str) -> frozenset[int]:
    return frozenset(strategy_from_text(text))


def _cmd_solve(args) -> int:
    inst = _load(args.input)
    if args.algo != "exact" and inst.modulator is None:
        raise ValueError(f"algorithm {args.algo!r} needs an x line in the instance")
    if args.algo == "exact" and args.length_bound is not None:
        from .exact import solve_exact

        res = solve_exact(
            inst.graph, inst.source, args.length_bound, max_n=max(20, inst.graph.n)
        )
    else:
        res = run_algo(inst, args.algo)
    print(f"saved={res.best_saved}")
    print(f"strategy={strategy_to_text(res.best_strategy)}")
    print(f"explored={res.explored}")
    return 0


def _cmd_validate(args) -> int:
    inst = _load(args.input)
    strategy = strategy_from_text(args.strategy)
    outcome = simulate(inst.graph, inst.source, strategy)
    print(f"valid={str(outcome.valid).lower()}")
    print(f"saved={outcome.saved_count}")
    return 0 if outcome.valid else 1


def _cmd_kernelize(args) -> int:
    inst = _load(args.input)
    if inst.modulator is None or inst.demand is None:
        raise ValueError("kernelize needs x and k lines in the instance")
    out = kernelize(inst.graph, inst.source, inst.modulator - {inst.source}, inst.demand)
    _emit_instance(out.reduced, args.out)
    if args.sidecar:
        lines = [f"applied={str(out.applied).lower()}"]
        lines += [f"map {old + 1} -> {new + 1}" for old, new in sorted(out.id_map.items())]
        lines.append("junction " + ",".join(str(v + 1) for v in sorted(out.junction)))
        lines.append("core " + ",".join(str(v + 1) for v in out.added_core))
        lines.append("tail " + ",".join(str(v + 1) for v in out.added_tail))
        Path(args.sidecar).write_text("\n".join(lines) + "\n")
    return 0


def _cmd_modulator(args) -> int:
    inst = _load(args.input)
    if args.class_tag == "clique":
        mod = find_clique_modulator(inst.graph, args.k)
    else:
        mod = find_modulator(inst.graph, args.class_tag, args.k)
    if mod is None:
        print("none within budget")
        return 1
    print(strategy_to_text(tuple(sorted(mod.vertices))) or "(empty)")
    return 0


def _cmd_reduce(args) -> int:
    inst = _load(args.input)
    if args.kind == "diam2":
        out = reduce_clique_to_diameter2(inst.graph, args.k)
    elif args.kind == "split":
        out = reduce_clique_to_split(inst.graph, args.k)
    else:
        if not args.cover:
            raise ValueError("stars-ppt needs --cover")
        out = reduce_cliqueVC_to_stars(inst.graph, _parse_vertices(args.cover), args.k)
    _emit_instance(out.instance, args.out)
    if args.sidecar:
        lines = [f"vertex {v + 1} -> {c + 1}" for v, c in sorted(out.vertex_ids.items())]
        lines += [
            f"edge {u + 1},{v + 1} -> {ev + 1}"
            for (u, v), ev in sorted(out.edge_ids.items())
        ]
        for i, row in enumerate(out.grid_rows, 1):
            lines.append(f"grid row {i}: " + ",".join(str(a + 1) for a in row))
        if out.hub is not None:
            lines.append(f"hub {out.hub + 1}")
        Path(args.sidecar).write_text("\n".join(lines) + "\n")
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "random":
        if args.n < 1:
            raise ValueError("random instance needs n >= 1")
        g = gen_random(args.n, args.p, args.seed)
        inst = Instance(g, 0)
    else:
        inst = gen_planted(args.class_tag, args.inner, args.k, args.p, args.seed)
    _emit_instance(inst, args.out)
    return 0


def _cmd_bench(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    bench_dir(args.dir, algos, args.oracle, args.out, jobs=args.jobs)
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="ff", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run a solver on an instance file")
    p.add_argument("--algo", choices=ALGOS, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--length-bound", type=int, default=None)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("validate", help="simulate a defense sequence")
    p.add_argument("--input", required=True)
    p.add_argument("--strategy", required=True, help="comma-separated 1-based ids")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("kernelize", help="shrink a clique-modulator instance")
    p.add_argument("--input", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--sidecar", default=None)
    p.set_defaults(func=_cmd_kernelize)

    p = sub.add_parser("modulator", help="find a class modulator within budget")
    p.add_argument("--class", dest="class_tag", choices=CLASS_TAGS, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_modulator)

    p = sub.add_parser("reduce", help="build a hardness gadget from a graph")
    p.add_argument("--kind", choices=REDUCTION_KINDS, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--cover", default=None, help="1-based vertex cover, stars-ppt only")
    p.add_argument("--input", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--sidecar", default=None)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("--kind", choices=("planted", "random"), default="planted")
    p.add_argument("--class", dest="class_tag", choices=PLANTED_TAGS, default="threshold")
    p.add_argument("--inner", type=int, default=8)
    p.add_argument("-k", type=int, default=1)
    p.add_argument("-n", type=int, default=8, help="random kind only")
    p.add_argument("-p", type=float, default=0.3)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="run solvers over an instance directory")
    p.add_argument("--dir", required=True)
    p.add_argument("--algos", default="exact")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=_cmd_bench)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
