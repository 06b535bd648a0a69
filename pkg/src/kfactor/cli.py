"""Command-line entry point: ``kfactor <subcommand> ...``.

Every subcommand except ``construct`` writes one JSON report to ``--out``
(standard output by default). Exit status: 0 success, 1 a checked property
failed (theorem contradiction, invalid certificate), 2 usage or guard errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from typing import Callable

from . import families, graph
from .factoring import (
    DEFAULT_BRUTE_MAX_EDGES,
    DEFAULT_DEFICIENCY_MAX_N,
    brute_force_factor,
    decide_by_deficiency,
    has_k_factor,
)
from .formats import Report, graph_summary, parse_graph6, to_dot, to_graph6
from .graph import GraphError
from .params import DEFAULT_MAX_N, binding_number, toughness
from .spectral import COMPARE_TOL, DEFAULT_TOL, hong_nikiforov_bound, spectral_radius
from .verify import (
    check_binding_corollary,
    check_edge_theorem,
    check_spectral_theorem,
    check_tough_theorem,
    sweep,
)

log = logging.getLogger("kfactor")


class PropertyFailure(Exception):
    pass


def _read_graphs(path: str) -> list[graph.Graph]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    graphs = [parse_graph6(line.strip()) for line in text.splitlines() if line.strip()]
    if not graphs:
        raise GraphError(f"no graph6 lines in {path}")
    return graphs


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _echo(args: argparse.Namespace) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "out")}


def _per_graph(args, compute: Callable[[graph.Graph], tuple[dict, bool]]) -> int:
    t0 = time.perf_counter()
    graphs = _read_graphs(args.input)
    t1 = time.perf_counter()
    summaries, results, failed = [], [], False
    for g in graphs:
        res, bad = compute(g)
        summaries.append(graph_summary(g))
        results.append(res)
        failed |= bad
    t2 = time.perf_counter()
    single = len(graphs) == 1
    report = Report(
        command=_echo(args),
        graph_summary=summaries[0] if single else {"graphs": summaries},
        results=results[0] if single else {"graphs": results},
        timing={"parse": t1 - t0, "compute": t2 - t1},
    )
    _write(args.out, report.to_json())
    return 1 if failed else 0


# ----------------------------------------------------------------- commands


def cmd_construct(args) -> int:
    fam = args.family
    highlight = None
    if fam in ("g1", "g2"):
        inst = (families.g1 if fam == "g1" else families.g2)(args.n, args.k)
        g = inst.graph
        highlight = (inst.clique_S, inst.independent_T)
    elif fam == "conj":
        g = families.conjecture_extremal(args.n, args.k)
    elif fam == "complete":
        g = graph.complete(args.n)
    elif fam == "cycle":
        g = graph.cycle(args.n)
    else:
        g = graph.random_graph(args.n, args.p, args.seed, args.connected, args.min_degree)
    if args.format == "dot":
        _write(args.out, to_dot(g, highlight))
    else:
        _write(args.out, to_graph6(g) + "\n")
    return 0


def cmd_spectral(args) -> int:
    def compute(g):
        r = spectral_radius(g, args.tol)
        bound = hong_nikiforov_bound(g) if g.n and g.min_degree >= 1 else None
        return {"spectral": r.to_dict(), "hong_nikiforov_bound": bound}, False

    return _per_graph(args, compute)


def cmd_factor(args) -> int:
    def compute(g):
        if args.method == "deficiency":
            v = decide_by_deficiency(g, args.k, args.max_n)
        elif args.method == "brute":
            v = brute_force_factor(g, args.k, args.max_edges)
        else:
            v = has_k_factor(g, args.k, args.max_n)
        return {"verdict": v.to_dict()}, False

    return _per_graph(args, compute)


def cmd_params(args) -> int:
    both = not (args.toughness or args.binding)

    def compute(g):
        out = {}
        if args.toughness or both:
            out["toughness"] = None if g.is_complete() else toughness(g, args.max_n).to_dict()
        if args.binding or both:
            out["binding"] = binding_number(g, args.max_n).to_dict()
        return out, False

    return _per_graph(args, compute)


def cmd_verify(args) -> int:
    def compute(g):
        if args.theorem == "spectral":
            v = check_spectral_theorem(g, args.k, args.tol)
        elif args.theorem == "edge":
            v = check_edge_theorem(g, args.k)
        elif args.theorem == "tough":
            v = check_tough_theorem(g, args.k, args.tol, args.trusted, args.max_n)
        else:
            v = check_binding_corollary(g, args.k, args.tol, args.trusted, args.max_n)
        if v.contradiction:
            log.error("contradiction: hypotheses hold, graph not extremal, no %d-factor", args.k)
        return {"verdict": v.to_dict()}, v.contradiction

    return _per_graph(args, compute)


def cmd_sweep(args) -> int:
    t0 = time.perf_counter()
    rep = sweep(args.k, args.n, args.samples, (args.p_lo, args.p_hi), args.seed, args.workers)
    report = Report(
        command=_echo(args),
        graph_summary=None,
        results={"sweep": rep.to_dict()},
        timing={"compute": time.perf_counter() - t0},
    )
    _write(args.out, report.to_json())
    if rep.contradictions:
        log.error("%d contradictions, seeds %s", rep.contradictions, rep.contradiction_seeds)
        return 1
    return 0


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kfactor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def io(p, needs_input=True):
        if needs_input:
            p.add_argument("--in", dest="input", required=True, help="graph6 file or - for stdin")
        p.add_argument("--out", default="-", help="output path or - for stdout")

    p = sub.add_parser("construct", help="build a named graph")
    p.add_argument("--family", required=True,
                   choices=["g1", "g2", "conj", "complete", "cycle", "random"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, default=1, help="k for g1/g2, a for conj")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--min-degree", type=int, default=0)
    p.add_argument("--format", choices=["graph6", "dot"], default="graph6")
    io(p, needs_input=False)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("spectral", help="spectral radius and Hong–Nikiforov bound")
    io(p)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("factor", help="decide k-factor existence")
    io(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--method", choices=["gadget", "deficiency", "brute"], default="gadget")
    p.add_argument("--max-n", type=int, default=DEFAULT_DEFICIENCY_MAX_N)
    p.add_argument("--max-edges", type=int, default=DEFAULT_BRUTE_MAX_EDGES)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("params", help="exact toughness / binding number")
    io(p)
    p.add_argument("--toughness", action="store_true")
    p.add_argument("--binding", action="store_true")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("verify", help="check one theorem on a graph")
    io(p)
    p.add_argument("--theorem", required=True, choices=["spectral", "edge", "tough", "binding"])
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--tol", type=float, default=COMPARE_TOL)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--trusted", action="store_true",
                   help="attest 1-toughness / 1-binding instead of enumerating")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="random counterexample search")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p-lo", type=float, default=0.3)
    p.add_argument("--p-hi", type=float, default=0.9)
    p.add_argument("--workers", type=int, default=1)
    io(p, needs_input=False)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s", stream=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
