"""Euler-Maruyama simulation of the disagreement dynamics.

Each trajectory draws its Gaussian increments from its own Philox stream
keyed by ``(seed, trajectory index)``, so estimates do not depend on how
trajectories are split across workers.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .. import _kernels
from ..errors import UnstableStep
from ..graph import WeightedGraph
from ..measures import SocSystem, _coerce_output
from ..spectral import centering_matrix, decompose, spectrum
from .lyapunov import FocSystem

CHUNK_STEPS = 4096


@dataclass(frozen=True)
class SimConfig:
    """Simulation parameters; ``dt=None`` picks ``min(1e-3, 0.05 / lambda_max)``."""

    dt: float | None = None
    horizon: float = 200.0
    burn_in: float = 20.0
    trajectories: int = 64
    seed: int = 0
    zero_noise: bool = False

    def __post_init__(self):
        if self.dt is not None and not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if not 0 <= self.burn_in < self.horizon:
            raise ValueError("need 0 <= burn_in < horizon")
        if self.trajectories < 1:
            raise ValueError("trajectories must be positive")


@dataclass(frozen=True)
class _Problem:
    drift: np.ndarray
    noise_map: np.ndarray  # (dim, n): increment = sqrt(dt) * noise_map @ z
    out_map: np.ndarray
    rate: float  # stability scale used by the dt guard


def _psd_sqrt(L: np.ndarray) -> np.ndarray:
    if not np.any(L):
        return np.zeros_like(L)
    s = decompose(L)
    w = np.clip(s.eigenvalues, 0.0, None)
    w[w <= s.zero_tolerance] = 0.0
    R = (s.eigenvectors * np.sqrt(w)) @ s.eigenvectors.T
    return 0.5 * (R + R.T)


def _problem(system) -> _Problem:
    if isinstance(system, WeightedGraph):
        system = FocSystem(system)
    if isinstance(system, FocSystem):
        g = system.coupling
        sp = spectrum(g)
        sp.require_connected()
        q = _coerce_output(system.q, g.n)
        return _Problem(-g.laplacian(), centering_matrix(g.n), _psd_sqrt(q.laplacian),
                        float(sp.eigenvalues[-1]))
    if isinstance(system, SocSystem):
        g = system.coupling
        n = g.n
        sp = spectrum(g)
        sp.require_connected()
        L = g.laplacian()
        damp = system.beta * (np.eye(n) if system.soc_type == 1 else L)
        drift = np.block([[np.zeros((n, n)), np.eye(n)], [-L, -damp]])
        noise_map = np.vstack([np.zeros((n, n)), centering_matrix(n)])
        out_map = np.zeros((2 * n, 2 * n))
        out_map[:n, :n] = _psd_sqrt(system.q_x.laplacian)
        out_map[n:, n:] = _psd_sqrt(system.q_v.laplacian)
        rate = float(np.max(np.abs(np.linalg.eigvals(drift))))
        return _Problem(drift, noise_map, out_map, rate)
    raise TypeError(f"unsupported system type {type(system).__name__}")


def resolve_dt(system, cfg: SimConfig) -> float:
    rate = _problem(system).rate
    return _resolve_dt(rate, cfg)


def _resolve_dt(rate: float, cfg: SimConfig) -> float:
    dt = cfg.dt if cfg.dt is not None else min(1e-3, 0.05 / rate)
    if dt > 0.1 / rate:
        raise UnstableStep(f"dt={dt:g} exceeds 0.1/lambda_max={0.1 / rate:g}")
    return dt


def _trajectory_averages(prob: _Problem, cfg: SimConfig, dt: float, idx: range,
                         backend: str | None = None) -> np.ndarray:
    kern = _kernels.backends()[backend] if backend else _kernels
    steps = int(round(cfg.horizon / dt))
    burn = int(round(cfg.burn_in / dt))
    dim, width = prob.noise_map.shape
    drift = np.ascontiguousarray(prob.drift, dtype=float)
    out_map = np.ascontiguousarray(prob.out_map, dtype=float)
    scale = np.sqrt(dt) * prob.noise_map.T
    gens = [np.random.Generator(np.random.Philox(key=[cfg.seed & (2**64 - 1), r])) for r in idx]
    ntraj = len(gens)
    state = np.zeros((ntraj, dim))
    acc = np.zeros(ntraj)
    for start in range(0, steps, CHUNK_STEPS):
        count = min(CHUNK_STEPS, steps - start)
        noise = np.empty((count, ntraj, dim))
        for r, gen in enumerate(gens):
            z = gen.standard_normal((count, width))
            noise[:, r, :] = 0.0 if cfg.zero_noise else z @ scale
        kern.em_run(drift, noise, state, dt, out_map, max(burn - start, 0), acc)
    return acc / (steps - burn)


def _worker(args):
    return _trajectory_averages(*args)


def trajectory_averages(system, cfg: SimConfig = SimConfig(), workers: int = 1,
                        backend: str | None = None) -> np.ndarray:
    """Per-trajectory time averages of ``y^T y`` after burn-in."""
    prob = _problem(system)
    dt = _resolve_dt(prob.rate, cfg)
    n = cfg.trajectories
    if workers <= 1 or n == 1:
        return _trajectory_averages(prob, cfg, dt, range(n), backend)
    bounds = np.linspace(0, n, min(workers, n) + 1).astype(int)
    jobs = [(prob, cfg, dt, range(a, b), backend) for a, b in zip(bounds[:-1], bounds[1:])]
    with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
        return np.concatenate(list(pool.map(_worker, jobs)))


def monte_carlo_measure(system, cfg: SimConfig = SimConfig(), workers: int = 1,
                        backend: str | None = None) -> tuple[float, float]:
    """``(estimate, stderr)`` of the steady-state output variance."""
    avg = trajectory_averages(system, cfg, workers, backend)
    est = float(np.mean(avg))
    err = float(np.std(avg, ddof=1) / np.sqrt(len(avg))) if len(avg) > 1 else float("nan")
    return est, err
