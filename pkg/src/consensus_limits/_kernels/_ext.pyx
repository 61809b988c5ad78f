# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: edge-subset mask scanning and Euler-Maruyama stepping.

Masks index the unordered pairs of ``itertools.combinations(range(n), 2)``;
node neighborhoods are kept as ``uint32`` bitsets, so ``n <= 8``.
"""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint32_t, int64_t, int8_t, uint8_t

cnp.import_array()

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil

FILTERS = {"all-connected": 0, "trees": 1, "unicyclic": 2, "bipartite": 3}


cdef inline uint32_t _expand(const uint32_t* adj, uint32_t frontier) noexcept nogil:
    cdef uint32_t out = 0
    cdef int i
    while frontier:
        i = __builtin_ctz(frontier)
        out |= adj[i]
        frontier &= frontier - 1
    return out


cdef inline uint32_t _reach(const uint32_t* adj, int src) noexcept nogil:
    cdef uint32_t seen = 1u << src
    cdef uint32_t frontier = seen
    cdef uint32_t nxt
    while frontier:
        nxt = _expand(adj, frontier)
        frontier = nxt & ~seen
        seen |= nxt
    return seen


cdef inline int _eccentricity(const uint32_t* adj, int src, uint32_t full) noexcept nogil:
    cdef uint32_t seen = 1u << src
    cdef uint32_t frontier = seen
    cdef int d = 0
    while seen != full:
        frontier = _expand(adj, frontier) & ~seen
        seen |= frontier
        d += 1
    return d


cdef inline bint _is_bipartite(const uint32_t* adj, int n, uint32_t full) noexcept nogil:
    cdef uint32_t seen = 1u, frontier = 1u, even = 1u, odd = 0u
    cdef int level = 0, i
    while seen != full:
        frontier = _expand(adj, frontier) & ~seen
        seen |= frontier
        level += 1
        if level & 1:
            odd |= frontier
        else:
            even |= frontier
    for i in range(n):
        if (even >> i) & 1:
            if adj[i] & even:
                return False
        elif adj[i] & odd:
            return False
    return True


cdef inline void _build_adj(uint32_t mask, int n_pairs, const int* pi, const int* pj,
                            uint32_t* adj, int n) noexcept nogil:
    cdef int k
    for k in range(n):
        adj[k] = 0
    for k in range(n_pairs):
        if (mask >> k) & 1:
            adj[pi[k]] |= 1u << pj[k]
            adj[pj[k]] |= 1u << pi[k]


cdef inline bint _accept(uint32_t mask, int n, int filt, const uint32_t* adj,
                         uint32_t full) noexcept nogil:
    cdef int m = __builtin_popcount(mask)
    if filt == 1 and m != n - 1:
        return False
    if filt == 2 and m != n:
        return False
    if m < n - 1:
        return False
    if _reach(adj, 0) != full:
        return False
    if filt == 3 and not _is_bipartite(adj, n, full):
        return False
    return True


def _pairs(int n):
    pi = np.empty(n * (n - 1) // 2, dtype=np.intc)
    pj = np.empty_like(pi)
    cdef int k = 0, i, j
    for i in range(n):
        for j in range(i + 1, n):
            pi[k] = i
            pj[k] = j
            k += 1
    return pi, pj


def count_connected(int n, int64_t lo, int64_t hi, int filt=0):
    """Number of accepted masks in ``[lo, hi)``."""
    if n < 1 or n > 8:
        raise ValueError("n must be in 1..8")
    pi_a, pj_a = _pairs(n)
    cdef int[::1] pi = pi_a, pj = pj_a
    cdef int n_pairs = n * (n - 1) // 2
    cdef uint32_t full = (1u << n) - 1
    cdef uint32_t adj[8]
    cdef int64_t mask, count = 0
    with nogil:
        for mask in range(lo, hi):
            if filt == 0 or filt == 3:
                if __builtin_popcount(<uint32_t>mask) < n - 1:
                    continue
            elif filt == 1 and __builtin_popcount(<uint32_t>mask) != n - 1:
                continue
            elif filt == 2 and __builtin_popcount(<uint32_t>mask) != n:
                continue
            _build_adj(<uint32_t>mask, n_pairs, &pi[0] if n_pairs else NULL,
                       &pj[0] if n_pairs else NULL, adj, n)
            if _accept(<uint32_t>mask, n, filt, adj, full):
                count += 1
    return int(count)


def scan(int n, int64_t lo, int64_t hi, int filt=0):
    """Accepted masks in ``[lo, hi)`` with their combinatorial statistics.

    Returns a dict of arrays: ``mask, m, degrees (N, n), diameter,
    cut_edges, sigma, bipartite``.
    """
    if n < 1 or n > 8:
        raise ValueError("n must be in 1..8")
    pi_a, pj_a = _pairs(n)
    cdef int[::1] pi = pi_a, pj = pj_a
    cdef int n_pairs = n * (n - 1) // 2
    cdef uint32_t full = (1u << n) - 1
    cdef int64_t size = max(hi - lo, 0)
    masks_a = np.empty(size, dtype=np.int64)
    m_a = np.empty(size, dtype=np.int8)
    deg_a = np.empty((size, n), dtype=np.int8)
    diam_a = np.empty(size, dtype=np.int8)
    cut_a = np.empty(size, dtype=np.int8)
    sigma_a = np.empty(size, dtype=np.int8)
    bip_a = np.empty(size, dtype=np.uint8)
    cdef int64_t[::1] masks = masks_a
    cdef int8_t[::1] m_v = m_a, diam_v = diam_a, cut_v = cut_a, sigma_v = sigma_a
    cdef int8_t[:, ::1] deg_v = deg_a
    cdef uint8_t[::1] bip_v = bip_a
    cdef uint32_t adj[8]
    cdef uint32_t saved_i, saved_j
    cdef int64_t mask, out = 0
    cdef int i, j, k, e, s, d, cut, sig
    with nogil:
        for mask in range(lo, hi):
            if filt == 1 and __builtin_popcount(<uint32_t>mask) != n - 1:
                continue
            if filt == 2 and __builtin_popcount(<uint32_t>mask) != n:
                continue
            if __builtin_popcount(<uint32_t>mask) < n - 1:
                continue
            _build_adj(<uint32_t>mask, n_pairs, &pi[0] if n_pairs else NULL,
                       &pj[0] if n_pairs else NULL, adj, n)
            if not _accept(<uint32_t>mask, n, filt, adj, full):
                continue
            masks[out] = mask
            m_v[out] = __builtin_popcount(<uint32_t>mask)
            for i in range(n):
                deg_v[out, i] = __builtin_popcount(adj[i])
            d = 0
            for s in range(n):
                e = _eccentricity(adj, s, full)
                if e > d:
                    d = e
            diam_v[out] = d
            cut = 0
            for k in range(n_pairs):
                if (mask >> k) & 1:
                    i = pi[k]
                    j = pj[k]
                    saved_i = adj[i]
                    saved_j = adj[j]
                    adj[i] &= ~(1u << j)
                    adj[j] &= ~(1u << i)
                    if not ((_reach(adj, i) >> j) & 1):
                        cut += 1
                    adj[i] = saved_i
                    adj[j] = saved_j
            cut_v[out] = cut
            sig = 0
            for i in range(n):
                for j in range(i + 1, n):
                    e = (__builtin_popcount(adj[i]) + __builtin_popcount(adj[j])
                         - __builtin_popcount(adj[i] & adj[j]))
                    if e > sig:
                        sig = e
            sigma_v[out] = sig
            bip_v[out] = _is_bipartite(adj, n, full)
            out += 1
    return {
        "mask": masks_a[:out].copy(),
        "m": m_a[:out].copy(),
        "degrees": deg_a[:out].copy(),
        "diameter": diam_a[:out].copy(),
        "cut_edges": cut_a[:out].copy(),
        "sigma": sigma_a[:out].copy(),
        "bipartite": bip_a[:out].astype(bool),
    }


def em_run(const double[:, ::1] drift, const double[:, :, ::1] noise, double[:, ::1] state,
           double dt, const double[:, ::1] out_map, Py_ssize_t accumulate_from,
           double[::1] acc):
    """Advance ``x <- x + dt * drift @ x + noise[t]`` for every step and trajectory.

    After each step ``t >= accumulate_from`` the output energy
    ``|out_map @ x|^2`` is added to ``acc`` (one slot per trajectory).
    ``state`` and ``acc`` are updated in place.
    """
    cdef Py_ssize_t steps = noise.shape[0], ntraj = noise.shape[1], dim = noise.shape[2]
    cdef Py_ssize_t rows = out_map.shape[0]
    cdef Py_ssize_t t, r, i, j
    cdef double s, energy
    cdef double[::1] tmp = np.empty(dim, dtype=np.float64)
    with nogil:
        for r in range(ntraj):
            for t in range(steps):
                for i in range(dim):
                    s = 0.0
                    for j in range(dim):
                        s = s + drift[i, j] * state[r, j]
                    tmp[i] = state[r, i] + dt * s + noise[t, r, i]
                for i in range(dim):
                    state[r, i] = tmp[i]
                if t >= accumulate_from:
                    energy = 0.0
                    for i in range(rows):
                        s = 0.0
                        for j in range(dim):
                            s = s + out_map[i, j] * state[r, j]
                        energy = energy + s * s
                    acc[r] += energy
