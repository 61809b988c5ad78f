"""``consensus-limits`` command-line interface.

Exit status: 0 on success, 1 on usage or input errors (one line on
stderr), 2 when an audit finds a bound violation.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import json
import math
import os
import sys

from . import bounds as B
from .applications import edge_transitive_loss, load_power_network, power_loss, tree_loss
from .errors import ConsensusError
from .graph import FAMILIES, family, graph_stats
from .io import format_edge_list, format_json_graph, load_graph
from .measures import OutputGraph, SocSystem, foc_measure, formation_energy, soc_measure
from .oracle import SimConfig, exhaustive_audit, monte_carlo_measure
from .oracle.audit import AUDIT_BOUNDS, write_scatter_csv
from .oracle.enumeration import EnumerationStream
from .oracle.lyapunov import FocSystem
from .oracle.montecarlo import resolve_dt
from .spectral import effective_resistance, spectrum, zeta


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _default_workers() -> int:
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:  # pragma: no cover - non-Linux
        return max(1, os.cpu_count() or 1)


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _common(p, fmt=True):
    if fmt:
        p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="consensus-limits", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="all applicable measures of one network")
    p.add_argument("--graph", required=True)
    p.add_argument("--output-graph", default="centering",
                   help="'centering' or a graph file (first-order and position output)")
    p.add_argument("--velocity-output-graph", default="centering",
                   help="'centering', 'none' or a graph file (second-order velocity output)")
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--soc-type", type=int, choices=(1, 2))
    _common(p)

    p = sub.add_parser("bounds", help="every bound report applicable to a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--beta", type=float, default=1.0)
    _common(p)

    p = sub.add_parser("family", help="write a standard family graph")
    p.add_argument("name", choices=FAMILIES + tuple(f.replace("_", "-") for f in FAMILIES))
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--k", type=int, help="clique size for star_like_clique")
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--format", choices=("edges", "json"), default="edges")
    p.add_argument("--output")

    p = sub.add_parser("enumerate", help="count connected labeled graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", default="all-connected",
                   choices=("all-connected", "trees", "unicyclic", "bipartite"))
    p.add_argument("--list", action="store_true", help="also emit every graph_id")
    p.add_argument("--workers", type=_positive_int, default=None)
    _common(p)

    p = sub.add_parser("audit", help="brute-force bound audit over all connected graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bounds", default=None,
                   help=f"comma list from {','.join(AUDIT_BOUNDS)}")
    p.add_argument("--filter", default="all-connected",
                   choices=("all-connected", "trees", "unicyclic", "bipartite"))
    p.add_argument("--scatter", help="also write graph_id,m,W,T,delta_bound,rho rows here")
    p.add_argument("--workers", type=_positive_int, default=None)
    _common(p)

    p = sub.add_parser("simulate", help="Monte-Carlo estimate against the closed form")
    p.add_argument("--graph", required=True)
    p.add_argument("--output-graph", default="centering")
    p.add_argument("--velocity-output-graph", default="none")
    p.add_argument("--soc-type", type=int, choices=(1, 2))
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--dt", type=float)
    p.add_argument("--horizon", type=float, default=200.0)
    p.add_argument("--burn-in", type=float, default=20.0)
    p.add_argument("--trajectories", type=_positive_int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--zero-noise", action="store_true")
    p.add_argument("--workers", type=_positive_int, default=None)
    _common(p)

    p = sub.add_parser("powerloss", help="resistive loss of a power network")
    p.add_argument("--network", required=True)
    p.add_argument("--edge-transitive", metavar="FAMILY",
                   help="cycle, complete, complete-bipartite-balanced or star")
    _common(p)
    return parser


# ------------------------------------------------------------------ output

@contextlib.contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _emit(args, payload: dict, rows=None):
    """Write ``payload`` as JSON, or ``rows`` (header first) as CSV."""
    with _sink(args.output) as out:
        if getattr(args, "format", "json") == "csv":
            w = csv.writer(out, lineterminator="\n")
            for row in rows if rows is not None else _flatten(payload):
                w.writerow([_csv_cell(x) for x in row])
        else:
            out.write(json.dumps(_jsonable(payload), indent=2) + "\n")


def _csv_cell(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return format(x, ".17g")
    return x


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def _flatten(payload: dict, prefix=""):
    rows = [("key", "value")] if not prefix else []
    for k, v in payload.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            rows += _flatten(v, key + ".")
        elif isinstance(v, (list, tuple)):
            rows.append((key, json.dumps(_jsonable(v))))
        else:
            rows.append((key, v))
    return rows


def _output_graph(spec: str, n: int):
    if spec == "centering":
        return OutputGraph.centering(n)
    if spec == "none":
        return None
    return OutputGraph.from_graph(load_graph(spec))


# ------------------------------------------------------------------ commands

def cmd_analyze(args) -> int:
    g = load_graph(args.graph)
    s = spectrum(g)
    s.require_connected()
    q = _output_graph(args.output_graph, g.n)
    qv = _output_graph(args.velocity_output_graph, g.n)
    stats = graph_stats(g)
    payload = {
        "n": g.n,
        "m": g.m,
        "weight_sum": g.weight_sum,
        "diameter": stats.diameter,
        "cut_edges": stats.cut_edges,
        "spanning_tree_count": stats.spanning_tree_count,
        "algebraic_connectivity": float(s.eigenvalues[1]) if g.n > 1 else 0.0,
        "zeta_1": zeta(s, 1),
        "zeta_2": zeta(s, 2),
        "r_total": effective_resistance(s).r_total,
        "output_graph": q.kind,
        "rho_foc": foc_measure(s, q),
    }
    types = (args.soc_type,) if args.soc_type else (1, 2)
    for t in types:
        sys_ = SocSystem(g, t, args.beta, q_x=q, q_v=qv)
        m = soc_measure(sys_, s)
        payload[f"soc_type{t}"] = {"beta": args.beta, "rho_x": m.rho_x, "rho_v": m.rho_v,
                                   "rho_total": m.rho_total}
        if t == 2:
            payload["formation_energy"] = formation_energy(sys_)
    _emit(args, payload)
    return 0


def cmd_bounds(args) -> int:
    g = load_graph(args.graph)
    reports = B.all_bounds(g, beta=args.beta)
    rows = [("name", "lower", "upper", "measured", "satisfied", "tight_at")]
    rows += [(r.name, r.lower, r.upper, r.measured, r.satisfied, r.tight_at or "") for r in reports]
    _emit(args, {"n": g.n, "m": g.m, "beta": args.beta,
                 "reports": [r.to_dict() for r in reports]}, rows)
    return 0


def cmd_family(args) -> int:
    g = family(args.name.replace("-", "_"), args.n, k=args.k, n1=args.n1, n2=args.n2)
    text = format_json_graph(g) if args.format == "json" else format_edge_list(g)
    with _sink(args.output) as out:
        out.write(text)
    return 0


def cmd_enumerate(args) -> int:
    stream = EnumerationStream(args.n, args.filter)
    workers = args.workers or _default_workers()
    if args.list:
        masks = list(stream.masks(workers=workers))
        payload = {"n": args.n, "filter": args.filter, "count": len(masks), "graph_ids": masks}
        rows = [("graph_id",)] + [(m,) for m in masks]
    else:
        count = stream.count(workers=workers)
        payload = {"n": args.n, "filter": args.filter, "count": count}
        rows = [("n", "filter", "count"), (args.n, args.filter, count)]
    _emit(args, payload, rows)
    return 0


def cmd_audit(args) -> int:
    workers = args.workers or _default_workers()
    with contextlib.ExitStack() as stack:
        table = None
        if args.format == "csv":
            table = stack.enter_context(_sink(args.output))
        report = exhaustive_audit(args.n, args.bounds, args.filter, workers=workers,
                                  csv=table, scatter=args.scatter is not None)
    if args.scatter:
        with open(args.scatter, "w", newline="") as fh:
            write_scatter_csv(report, fh)
    summary = report.to_dict()
    if args.format == "json":
        _emit(args, summary)
    else:
        print(f"audited {report.count} graphs, {report.violation_count} violations, "
              f"min rho {report.minimum.value!r}, max rho {report.maximum.value!r}",
              file=sys.stderr)
    return 2 if report.violation_count else 0


def cmd_simulate(args) -> int:
    g = load_graph(args.graph)
    q = _output_graph(args.output_graph, g.n)
    cfg = SimConfig(dt=args.dt, horizon=args.horizon, burn_in=args.burn_in,
                    trajectories=args.trajectories, seed=args.seed, zero_noise=args.zero_noise)
    if args.soc_type:
        system = SocSystem(g, args.soc_type, args.beta, q_x=q,
                           q_v=_output_graph(args.velocity_output_graph, g.n))
        closed = soc_measure(system).rho_total
    else:
        system = FocSystem(g, q)
        closed = foc_measure(g, q)
    est, err = monte_carlo_measure(system, cfg, workers=args.workers or _default_workers())
    z = (est - closed) / err if err > 0 else (0.0 if est == closed else math.inf)
    payload = {
        "estimate": est,
        "stderr": err,
        "closed_form": 0.0 if args.zero_noise else closed,
        "z_score": z,
        "within_3_stderr": abs(z) <= 3.0,
        "dt": resolve_dt(system, cfg),
        "horizon": cfg.horizon,
        "burn_in": cfg.burn_in,
        "trajectories": cfg.trajectories,
        "seed": cfg.seed,
    }
    if args.zero_noise:
        payload["z_score"] = 0.0 if est == 0.0 else math.inf
        payload["within_3_stderr"] = est == 0.0
    _emit(args, payload)
    return 0


def cmd_powerloss(args) -> int:
    pn = load_power_network(args.network)
    rep = power_loss(pn)
    payload = {"n": pn.n, "m": pn.topology.m, "beta": pn.beta}
    payload.update(rep.to_dict())
    payload["nu_sum"] = math.fsum(rep.nu.values())
    if pn.topology.m == pn.n - 1:
        payload["tree_loss"] = tree_loss(pn)
    if args.edge_transitive:
        payload["edge_transitive_loss"] = edge_transitive_loss(pn, args.edge_transitive)
    rows = [("i", "j", "alpha", "nu")]
    rows += [(e["i"], e["j"], e["alpha"], e["nu"]) for e in payload["edges"]]
    rows += [("loss", "", payload["loss"], ""), ("alpha_bar", "", payload["alpha_bar"], "")]
    _emit(args, payload, rows)
    return 0


COMMANDS = {
    "analyze": cmd_analyze,
    "bounds": cmd_bounds,
    "family": cmd_family,
    "enumerate": cmd_enumerate,
    "audit": cmd_audit,
    "simulate": cmd_simulate,
    "powerloss": cmd_powerloss,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except (ConsensusError, ValueError, OSError, ArithmeticError) as exc:
        msg = " ".join(str(exc).split())
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
    return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
