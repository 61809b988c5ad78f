"""Weighted undirected graphs, standard families and structural statistics."""
from __future__ import annotations

import math
import warnings
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    Disconnected,
    DuplicateEdge,
    IndexOutOfRange,
    InvalidFamilyParams,
    NonPositiveWeight,
    SelfLoop,
)

Edge = tuple[int, int, float]


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph on nodes ``0..n-1`` with positive edge weights.

    Instances are immutable; use :func:`build_graph` to construct one from
    unvalidated input. ``edges`` is kept in canonical order: ``i < j``,
    sorted lexicographically.
    """

    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def is_unweighted(self) -> bool:
        return all(w == 1.0 for _, _, w in self.edges)

    @property
    def weight_sum(self) -> float:
        return float(math.fsum(w for _, _, w in self.edges))

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for i, j, _ in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def degrees(self) -> np.ndarray:
        """Weighted degrees d_i (sum of incident weights)."""
        d = np.zeros(self.n)
        for i, j, w in self.edges:
            d[i] += w
            d[j] += w
        return d

    @property
    def unweighted_degrees(self) -> np.ndarray:
        return np.array([len(s) for s in self.neighbors], dtype=np.int64)

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for i, j, w in self.edges:
            a[i, j] = a[j, i] = w
        return a

    def laplacian(self) -> np.ndarray:
        """Dense Laplacian ``L = D - A``."""
        a = self.adjacency()
        return np.diag(a.sum(axis=1)) - a

    def skeleton(self) -> "WeightedGraph":
        """Same edge set with every weight set to 1."""
        return WeightedGraph(self.n, tuple((i, j, 1.0) for i, j, _ in self.edges))

    def reweighted(self, weights: Sequence[float]) -> "WeightedGraph":
        if len(weights) != self.m:
            raise ValueError(f"expected {self.m} weights, got {len(weights)}")
        return build_graph(self.n, [(i, j, w) for (i, j, _), w in zip(self.edges, weights)])

    def without_edge(self, k: int) -> "WeightedGraph":
        return WeightedGraph(self.n, self.edges[:k] + self.edges[k + 1:])

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [[i, j, w] for i, j, w in self.edges]}


def build_graph(n: int, edges: Iterable[Sequence[float]]) -> WeightedGraph:
    """Validate and normalize an edge list.

    Each edge is ``(i, j)`` or ``(i, j, w)``; a missing weight means 1.0.
    """
    if int(n) != n or n < 1:
        raise IndexOutOfRange(f"node count must be a positive integer, got {n!r}")
    n = int(n)
    seen: dict[tuple[int, int], float] = {}
    for e in edges:
        if len(e) == 2:
            i, j = e
            w = 1.0
        elif len(e) == 3:
            i, j, w = e
        else:
            raise ValueError(f"edge must be (i, j) or (i, j, w), got {e!r}")
        if int(i) != i or int(j) != j:
            raise IndexOutOfRange(f"non-integer node index in edge {e!r}")
        i, j, w = int(i), int(j), float(w)
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"edge ({i}, {j}) outside node range [0, {n})")
        if i == j:
            raise SelfLoop(f"self-loop at node {i}")
        if not (w > 0.0) or not math.isfinite(w):
            raise NonPositiveWeight(f"edge ({i}, {j}) has weight {w}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DuplicateEdge(f"edge {key} listed twice")
        seen[key] = w
    return WeightedGraph(n, tuple((i, j, seen[(i, j)]) for i, j in sorted(seen)))


# ---------------------------------------------------------------- bitmasks

def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Unordered node pairs in the bit order used by edge-subset masks."""
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> WeightedGraph:
    pairs = edge_pairs(n)
    return WeightedGraph(n, tuple((i, j, 1.0) for k, (i, j) in enumerate(pairs) if mask >> k & 1))


def mask_of(g: WeightedGraph) -> int:
    index = {p: k for k, p in enumerate(edge_pairs(g.n))}
    mask = 0
    for i, j, _ in g.edges:
        mask |= 1 << index[(i, j)]
    return mask


# ---------------------------------------------------------------- families

FAMILIES = (
    "complete",
    "star",
    "cycle",
    "path",
    "complete_bipartite",
    "star_like_K3",
    "star_like_clique",
    "path_like_K3",
)


def _unit(n: int, pairs: Iterable[tuple[int, int]]) -> WeightedGraph:
    return build_graph(n, [(i, j, 1.0) for i, j in pairs])


def family(name: str, n: int | None = None, *, k: int | None = None,
           n1: int | None = None, n2: int | None = None) -> WeightedGraph:
    """Unit-weight member of a standard family.

    ``star_like_clique`` is a clique on nodes ``0..k-1`` with the remaining
    ``n-k`` nodes attached as leaves to node 0; ``star_like_K3`` is the
    ``k = 3`` case. ``path_like_K3`` is the path ``0-1-...-(n-3)`` with a
    triangle on ``{n-3, n-2, n-1}``. ``complete_bipartite`` takes ``n1`` and
    ``n2`` (parts ``0..n1-1`` and ``n1..n1+n2-1``).
    """
    name = name.replace("-", "_")
    if name == "complete_bipartite":
        if n1 is None or n2 is None or n1 < 1 or n2 < 1:
            raise InvalidFamilyParams("complete_bipartite needs n1 >= 1 and n2 >= 1")
        if n is not None and n != n1 + n2:
            raise InvalidFamilyParams(f"n={n} does not equal n1 + n2 = {n1 + n2}")
        return _unit(n1 + n2, ((i, n1 + j) for i in range(n1) for j in range(n2)))
    if n is None or int(n) != n or n < 1:
        raise InvalidFamilyParams(f"family {name!r} needs n >= 1, got {n!r}")
    n = int(n)
    if name == "complete":
        return _unit(n, combinations(range(n), 2))
    if name == "star":
        return _unit(n, ((0, i) for i in range(1, n)))
    if name == "path":
        return _unit(n, ((i, i + 1) for i in range(n - 1)))
    if name == "cycle":
        if n < 3:
            raise InvalidFamilyParams("cycle needs n >= 3")
        return _unit(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    if name in ("star_like_K3", "star_like_clique"):
        if name == "star_like_K3":
            k = 3
        if n < 4 or k is None or not (1 <= k <= n):
            raise InvalidFamilyParams(f"{name} needs n >= 4 and 1 <= k <= n (n={n}, k={k})")
        clique = list(combinations(range(k), 2))
        return _unit(n, clique + [(0, leaf) for leaf in range(k, n)])
    if name == "path_like_K3":
        if n < 4:
            raise InvalidFamilyParams("path_like_K3 needs n >= 4")
        t = n - 3
        return _unit(n, [(i, i + 1) for i in range(t)] + [(t, n - 2), (t, n - 1), (n - 2, n - 1)])
    raise InvalidFamilyParams(f"unknown family {name!r}; expected one of {FAMILIES}")


# ---------------------------------------------------------------- structure

def is_connected(g: WeightedGraph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.neighbors[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.n


def hop_distances(g: WeightedGraph, source: int) -> list[int]:
    """Unweighted BFS distances from ``source`` (-1 for unreachable nodes)."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.neighbors[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def bridges(g: WeightedGraph) -> list[tuple[int, int]]:
    """Cut edges via iterative low-link DFS."""
    disc = [-1] * g.n
    low = [0] * g.n
    out: list[tuple[int, int]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(sorted(g.neighbors[root])))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v == parent:
                    continue
                if disc[v] < 0:
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, iter(sorted(g.neighbors[v]))))
                    advanced = True
                    break
                low[u] = min(low[u], disc[v])
            if not advanced:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[u])
                    if low[u] > disc[parent]:
                        out.append((min(u, parent), max(u, parent)))
    return sorted(out)


def is_bipartite(g: WeightedGraph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def log_spanning_tree_count(g: WeightedGraph) -> float:
    """``log T(G)`` from the LU-factorized cofactor of the Laplacian."""
    if g.n == 1:
        return 0.0
    if not is_connected(g):
        raise Disconnected("a disconnected graph has no spanning tree")
    sign, logdet = np.linalg.slogdet(g.laplacian()[:-1, :-1])
    if sign <= 0:
        raise Disconnected("Laplacian cofactor is singular: graph is disconnected")
    return float(logdet)


def spanning_tree_count(g: WeightedGraph) -> float:
    """Weighted number of spanning trees (matrix-tree theorem).

    Unweighted counts are rounded to the nearest integer while they are
    exactly representable; a ``RuntimeWarning`` flags a rounding residual
    above ``1e-6`` of the value. Disconnected graphs have count 0.
    """
    if not is_connected(g):
        return 0.0
    logdet = log_spanning_tree_count(g)
    if logdet > 709.0:
        return math.inf
    value = math.exp(logdet)
    if g.is_unweighted and value < 2.0 ** 53:
        rounded = float(round(value))
        if abs(value - rounded) > 1e-6 * value:
            warnings.warn(
                f"spanning-tree determinant {value!r} is not close to an integer",
                RuntimeWarning,
                stacklevel=2,
            )
        return rounded
    return value


@dataclass(frozen=True)
class GraphStats:
    m: int
    weight_sum: float
    degree_sequence: tuple[float, ...]
    diameter: int
    cut_edges: int
    spanning_tree_count: float
    log_spanning_tree_count: float
    wiener: int


def graph_stats(g: WeightedGraph) -> GraphStats:
    """Structural statistics of a connected graph (hop-based distances)."""
    if not is_connected(g):
        raise Disconnected("graph_stats requires a connected graph")
    diameter = 0
    wiener = 0
    for s in range(g.n):
        dist = hop_distances(g, s)
        diameter = max(diameter, max(dist))
        wiener += sum(dist)
    return GraphStats(
        m=g.m,
        weight_sum=g.weight_sum,
        degree_sequence=tuple(float(d) for d in g.degrees),
        diameter=diameter,
        cut_edges=len(bridges(g)),
        spanning_tree_count=spanning_tree_count(g),
        log_spanning_tree_count=log_spanning_tree_count(g),
        wiener=wiener // 2,
    )


def sparsity_measures(g: WeightedGraph) -> tuple[int, int, int]:
    """``(||A||_0, S_{0,1}, sigma)`` computed on the unweighted skeleton."""
    nbrs = g.neighbors
    a0 = 2 * g.m
    s01 = max((len(s) for s in nbrs), default=0)
    sigma = 0
    for i, j in combinations(range(g.n), 2):
        sigma = max(sigma, len(nbrs[i]) + len(nbrs[j]) - len(nbrs[i] & nbrs[j]))
    return a0, s01, sigma
