"""Pure numpy versions of the compiled kernels.

Masks are processed in vectorized blocks: each node's neighborhood is a
``uint32`` bitset column, and BFS frontiers are expanded with bitwise ORs
across the whole block at once.
"""
from __future__ import annotations

import numpy as np

FILTERS = {"all-connected": 0, "trees": 1, "unicyclic": 2, "bipartite": 3}

_BLOCK = 1 << 16


def _pairs(n: int):
    iu = np.triu_indices(n, 1)
    return iu[0].astype(np.intp), iu[1].astype(np.intp)


def _popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x).astype(np.int64)


def _adjacency(masks: np.ndarray, n: int) -> np.ndarray:
    pi, pj = _pairs(n)
    adj = np.zeros((len(masks), n), dtype=np.uint32)
    for k, (i, j) in enumerate(zip(pi, pj)):
        bit = ((masks >> k) & 1).astype(np.uint32)
        adj[:, i] |= bit << np.uint32(j)
        adj[:, j] |= bit << np.uint32(i)
    return adj


def _expand(adj: np.ndarray, frontier: np.ndarray) -> np.ndarray:
    n = adj.shape[1]
    out = np.zeros_like(frontier)
    for i in range(n):
        has = ((frontier >> np.uint32(i)) & np.uint32(1)).astype(bool)
        out[has] |= adj[has, i]
    return out


def _reach(adj: np.ndarray, src) -> np.ndarray:
    seen = np.left_shift(np.uint32(1), np.asarray(src, dtype=np.uint32)) * np.ones(
        len(adj), dtype=np.uint32
    )
    frontier = seen.copy()
    while frontier.any():
        nxt = _expand(adj, frontier)
        frontier = nxt & ~seen
        seen |= nxt
    return seen


def _eccentricity(adj: np.ndarray, src: int, full: int) -> np.ndarray:
    seen = np.full(len(adj), 1 << src, dtype=np.uint32)
    frontier = seen.copy()
    d = np.zeros(len(adj), dtype=np.int64)
    while True:
        todo = seen != full
        if not todo.any():
            return d
        frontier = _expand(adj, frontier) & ~seen
        seen |= frontier
        d += todo


def _bipartite(adj: np.ndarray, full: int) -> np.ndarray:
    N, n = adj.shape
    seen = np.ones(N, dtype=np.uint32)
    frontier = seen.copy()
    even = seen.copy()
    odd = np.zeros(N, dtype=np.uint32)
    level = 0
    while (seen != full).any():
        frontier = _expand(adj, frontier) & ~seen
        seen |= frontier
        level += 1
        if level & 1:
            odd |= frontier
        else:
            even |= frontier
    ok = np.ones(N, dtype=bool)
    for i in range(n):
        in_even = ((even >> np.uint32(i)) & np.uint32(1)).astype(bool)
        same = np.where(in_even, even, odd)
        ok &= (adj[:, i] & same) == 0
    return ok


def _accept_block(n: int, lo: int, hi: int, filt: int):
    masks = np.arange(lo, hi, dtype=np.int64)
    m = _popcount(masks.astype(np.uint32))
    keep = m >= n - 1
    if filt == 1:
        keep &= m == n - 1
    elif filt == 2:
        keep &= m == n
    masks = masks[keep]
    full = (1 << n) - 1
    adj = _adjacency(masks, n)
    conn = _reach(adj, 0) == full
    masks, adj = masks[conn], adj[conn]
    if filt == 3 and len(masks):
        bip = _bipartite(adj, full)
        masks, adj = masks[bip], adj[bip]
    return masks, adj


def _blocks(lo: int, hi: int):
    for a in range(lo, hi, _BLOCK):
        yield a, min(a + _BLOCK, hi)


def count_connected(n: int, lo: int, hi: int, filt: int = 0) -> int:
    """Number of accepted masks in ``[lo, hi)``."""
    if n < 1 or n > 8:
        raise ValueError("n must be in 1..8")
    return int(sum(len(_accept_block(n, a, b, filt)[0]) for a, b in _blocks(lo, hi)))


def _stats(n: int, masks: np.ndarray, adj: np.ndarray) -> dict:
    N = len(masks)
    full = (1 << n) - 1
    deg = _popcount(adj).astype(np.int8)
    diam = np.zeros(N, dtype=np.int64)
    for s in range(n):
        diam = np.maximum(diam, _eccentricity(adj, s, full))
    cut = np.zeros(N, dtype=np.int64)
    pi, pj = _pairs(n)
    for k, (i, j) in enumerate(zip(pi, pj)):
        has = ((masks >> k) & 1).astype(bool)
        if not has.any():
            continue
        sub = adj[has].copy()
        sub[:, i] &= ~np.uint32(1 << j)
        sub[:, j] &= ~np.uint32(1 << i)
        reached = (_reach(sub, i) >> np.uint32(j)) & np.uint32(1)
        cut[has] += reached == 0
    sigma = np.zeros(N, dtype=np.int64)
    for i, j in zip(pi, pj):
        sigma = np.maximum(sigma, _popcount(adj[:, i] | adj[:, j]))
    return {
        "mask": masks,
        "m": _popcount(masks.astype(np.uint32)).astype(np.int8),
        "degrees": deg,
        "diameter": diam.astype(np.int8),
        "cut_edges": cut.astype(np.int8),
        "sigma": sigma.astype(np.int8),
        "bipartite": _bipartite(adj, full) if N else np.zeros(0, dtype=bool),
    }


def scan(n: int, lo: int, hi: int, filt: int = 0) -> dict:
    """Accepted masks in ``[lo, hi)`` with their combinatorial statistics.

    Returns a dict of arrays: ``mask, m, degrees (N, n), diameter,
    cut_edges, sigma, bipartite``.
    """
    if n < 1 or n > 8:
        raise ValueError("n must be in 1..8")
    parts = [_stats(n, *_accept_block(n, a, b, filt)) for a, b in _blocks(lo, hi)]
    if not parts:
        parts = [_stats(n, np.zeros(0, dtype=np.int64), np.zeros((0, n), dtype=np.uint32))]
    return {k: np.concatenate([p[k] for p in parts]) for k in parts[0]}


def em_run(drift, noise, state, dt, out_map, accumulate_from, acc):
    """Advance ``x <- x + dt * drift @ x + noise[t]`` for every step and trajectory.

    After each step ``t >= accumulate_from`` the output energy
    ``|out_map @ x|^2`` is added to ``acc`` (one slot per trajectory).
    ``state`` and ``acc`` are updated in place.
    """
    A = np.asarray(drift).T
    C = np.asarray(out_map).T
    x = state
    for t in range(noise.shape[0]):
        x += dt * (x @ A) + noise[t]
        if t >= accumulate_from:
            y = x @ C
            acc += np.einsum("ij,ij->i", y, y)
