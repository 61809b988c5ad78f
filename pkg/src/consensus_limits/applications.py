"""Resistive power loss of a linearized swing-equation network.

Each line ``e`` has conductance ``g_e`` and susceptance ``b_e``; the
susceptance graph is the coupling graph and the conductance graph is the
output graph. All generators share the damping ``beta``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    GraphFormatError,
    HeterogeneousDamping,
    MissingEdgeParameter,
    NotDeclaredEdgeTransitive,
    UnequalSusceptance,
)
from .graph import WeightedGraph, build_graph, is_bipartite, is_connected
from .measures import formation_energy  # noqa: F401  (re-exported)
from .spectral import effective_resistance, pseudo_inverse, spectrum

AGREEMENT_TOL = 1e-9

Pair = tuple[int, int]


def _key(i: int, j: int) -> Pair:
    return (min(i, j), max(i, j))


@dataclass(frozen=True)
class PowerNetwork:
    topology: WeightedGraph
    g: dict[Pair, float]
    b: dict[Pair, float]
    beta: float = 1.0

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        pairs = {(i, j) for i, j, _ in self.topology.edges}
        for name, values in (("g", self.g), ("b", self.b)):
            missing = pairs - set(values)
            if missing:
                raise MissingEdgeParameter(f"{name} missing on edge(s) {sorted(missing)}")
            extra = set(values) - pairs
            if extra:
                raise MissingEdgeParameter(f"{name} given on non-edge(s) {sorted(extra)}")
            bad = [e for e, v in values.items() if not (v > 0 and math.isfinite(v))]
            if bad:
                raise ValueError(f"{name} must be positive and finite on {sorted(bad)}")

    @classmethod
    def from_lines(cls, n: int, lines, beta: float = 1.0) -> "PowerNetwork":
        """``lines`` holds ``(i, j, g, b)`` tuples or ``{"i", "j", "g", "b"}`` dicts."""
        g, b, pairs = {}, {}, []
        for line in lines:
            if isinstance(line, dict):
                try:
                    i, j = line["i"], line["j"]
                except KeyError as exc:
                    raise GraphFormatError(f"line {line!r} lacks {exc}") from None
                gv, bv = line.get("g"), line.get("b")
            else:
                i, j, gv, bv = line
            if gv is None or bv is None:
                raise MissingEdgeParameter(f"line ({i}, {j}) needs both g and b")
            pairs.append((i, j))
            g[_key(int(i), int(j))] = float(gv)
            b[_key(int(i), int(j))] = float(bv)
        topo = build_graph(n, pairs)
        return cls(topo, g, b, _damping(beta))

    @property
    def n(self) -> int:
        return self.topology.n

    @property
    def pairs(self) -> list[Pair]:
        return [(i, j) for i, j, _ in self.topology.edges]

    def alpha(self) -> dict[Pair, float]:
        return {e: self.g[e] / self.b[e] for e in self.pairs}

    def susceptance_graph(self) -> WeightedGraph:
        return WeightedGraph(self.n, tuple((i, j, self.b[(i, j)]) for i, j in self.pairs))

    def conductance_graph(self) -> WeightedGraph:
        return WeightedGraph(self.n, tuple((i, j, self.g[(i, j)]) for i, j in self.pairs))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "beta": self.beta,
            "lines": [{"i": i, "j": j, "g": self.g[(i, j)], "b": self.b[(i, j)]}
                      for i, j in self.pairs],
        }


def _damping(beta) -> float:
    if isinstance(beta, (list, tuple)):
        vals = {float(x) for x in beta}
        if len(vals) != 1:
            raise HeterogeneousDamping("generators must share one damping constant")
        beta = vals.pop()
    return float(beta)


def parse_power_network(text: str) -> PowerNetwork:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid power-network JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or "lines" not in data:
        raise GraphFormatError("power-network JSON needs 'n' and 'lines'")
    return PowerNetwork.from_lines(data["n"], data["lines"], data.get("beta", 1.0))


def load_power_network(path: str | Path) -> PowerNetwork:
    return parse_power_network(Path(path).read_text())


@dataclass(frozen=True)
class LossReport:
    loss: float
    alpha_bar: float
    nu: dict[Pair, float]
    alpha: dict[Pair, float]
    lower: float
    upper: float

    def to_dict(self) -> dict:
        return {
            "loss": self.loss,
            "alpha_bar": self.alpha_bar,
            "lower": self.lower,
            "upper": self.upper,
            "edges": [{"i": i, "j": j, "alpha": self.alpha[(i, j)], "nu": self.nu[(i, j)]}
                      for i, j in sorted(self.nu)],
        }


def power_loss(pn: PowerNetwork) -> LossReport:
    """Expected total resistive loss ``Tr(L_b^+ L_g) / (2 beta)`` with its bounds.

    The weighted-mean form ``alpha_bar (n - 1) / (2 beta)`` is computed
    separately from effective resistances and must agree with the trace.
    """
    sb = spectrum(pn.susceptance_graph())
    sb.require_connected()
    n, beta = pn.n, pn.beta
    trace_loss = float(np.sum(pseudo_inverse(sb) * pn.conductance_graph().laplacian())) / (2 * beta)
    R = effective_resistance(sb)
    alpha = pn.alpha()
    nu = {(i, j): float(R[i, j] * pn.b[(i, j)]) for i, j in pn.pairs}
    alpha_bar = math.fsum(nu[e] * alpha[e] for e in pn.pairs) / (n - 1)
    mean_loss = alpha_bar * (n - 1) / (2 * beta)
    if abs(mean_loss - trace_loss) > AGREEMENT_TOL * max(1.0, abs(trace_loss)):
        raise ArithmeticError(f"trace loss {trace_loss!r} disagrees with weighted mean {mean_loss!r}")
    lo = min(alpha.values()) * (n - 1) / (2 * beta)
    hi = max(alpha.values()) * (n - 1) / (2 * beta)
    return LossReport(trace_loss, alpha_bar, nu, alpha, lo, hi)


def tree_loss(pn: PowerNetwork) -> float:
    """``sum_e alpha_e / (2 beta)``, valid when the topology is a tree."""
    if pn.topology.m != pn.n - 1:
        raise ValueError("tree formula needs m = n - 1")
    return math.fsum(pn.alpha().values()) / (2 * pn.beta)


EDGE_TRANSITIVE = ("cycle", "complete", "complete_bipartite", "star")


def _matches_family(pn: PowerNetwork, tag: str) -> bool:
    """Degree/edge-count characterization of each family, up to relabeling."""
    topo = pn.topology
    n, m = topo.n, topo.m
    deg = topo.unweighted_degrees
    if not is_connected(topo):
        return False
    if tag == "cycle":
        return n >= 3 and bool(np.all(deg == 2))
    if tag == "complete":
        return m == n * (n - 1) // 2
    if tag == "star":
        return m == n - 1 and (n <= 2 or int(deg.max()) == n - 1)
    if tag == "complete_bipartite":
        # a connected bipartite graph with n^2/4 edges is K_{n/2,n/2}
        return n % 2 == 0 and m == n * n // 4 and is_bipartite(topo)
    return False


def edge_transitive_loss(pn: PowerNetwork, tag: str) -> float:
    """``(sum_e alpha_e) (n - 1) / (2 beta m)`` for a declared edge-transitive topology.

    ``tag`` declares the family; a cheap structural check rejects topologies
    that cannot be that family, and the result is cross-checked against
    :func:`power_loss`.
    """
    tag = tag.replace("-", "_")
    if tag == "complete_bipartite_balanced":
        tag = "complete_bipartite"
    if tag not in EDGE_TRANSITIVE or not _matches_family(pn, tag):
        raise NotDeclaredEdgeTransitive(
            f"topology is not a {tag!r} graph on {pn.n} nodes; "
            f"declared families are {EDGE_TRANSITIVE}"
        )
    bs = list(pn.b.values())
    if max(bs) - min(bs) > AGREEMENT_TOL * max(bs):
        raise UnequalSusceptance("edge-transitive formula needs identical susceptances")
    value = math.fsum(pn.alpha().values()) * (pn.n - 1) / (2 * pn.beta * pn.topology.m)
    ref = power_loss(pn).loss
    if abs(value - ref) > AGREEMENT_TOL * max(1.0, abs(ref)):
        raise ArithmeticError(f"edge-transitive loss {value!r} disagrees with trace loss {ref!r}")
    return value
