"""Performance measures from the controllability Gramian of the disagreement
network, solved as a dense linear system in vectorized form.

This path never touches the zeta/pseudo-inverse closed forms, so it serves
as an independent check of :mod:`consensus_limits.measures`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import LyapunovResidualTooLarge
from ..graph import WeightedGraph
from ..measures import OutputGraph, SocMeasure, SocSystem, _coerce_output
from ..spectral import LaplacianSpectrum, spectrum

RESIDUAL_TOL = 1e-8


@dataclass(frozen=True)
class FocSystem:
    """First-order network ``dx = -L_G x dt + dW`` with output graph ``q``."""

    coupling: WeightedGraph
    q: OutputGraph | None = None


@dataclass(frozen=True)
class LyapunovSolution:
    """Gramian ``P`` of the reduced system, its residual, and the basis used.

    ``basis`` has orthonormal columns spanning the complement of the
    consensus direction; the reduced state is ``basis.T @ x``.
    """

    gramian: np.ndarray
    residual: float
    basis: np.ndarray
    drift: np.ndarray

    def pulled_back(self) -> np.ndarray:
        """Position-block Gramian mapped back to node coordinates."""
        k = self.basis.shape[1]
        V = self.basis
        return V @ self.gramian[:k, :k] @ V.T


def helmert_basis(n: int) -> np.ndarray:
    """Orthonormal basis of ``1^perp`` from the Helmert contrasts."""
    H = np.zeros((n, n - 1))
    for k in range(1, n):
        H[:k, k - 1] = 1.0
        H[k, k - 1] = -k
        H[:, k - 1] /= np.sqrt(k * (k + 1))
    return H


def _basis(s: LaplacianSpectrum, kind: str) -> np.ndarray:
    if kind == "eigen":
        return s.eigenvectors[:, s.eigenvalues > s.zero_tolerance]
    if kind == "helmert":
        return helmert_basis(s.n)
    raise ValueError(f"unknown basis {kind!r}; expected 'eigen' or 'helmert'")


def solve_lyapunov(A: np.ndarray, BBt: np.ndarray) -> tuple[np.ndarray, float]:
    """Solve ``A P + P A^T + B B^T = 0`` for Hurwitz ``A``.

    Uses ``(I kron A + A kron I) vec(P) = -vec(B B^T)`` (column-major vec)
    and symmetrizes the result. Returns ``(P, residual)``.
    """
    k = A.shape[0]
    eye = np.eye(k)
    K = np.kron(eye, A) + np.kron(A, eye)
    p = np.linalg.solve(K, -BBt.reshape(-1, order="F"))
    P = p.reshape((k, k), order="F")
    P = 0.5 * (P + P.T)
    residual = float(np.linalg.norm(A @ P + P @ A.T + BBt))
    return P, residual


def _check(sol: LyapunovSolution) -> LyapunovSolution:
    limit = RESIDUAL_TOL * max(1.0, float(np.linalg.norm(sol.gramian)))
    if not sol.residual <= limit:
        raise LyapunovResidualTooLarge(f"residual {sol.residual:.3e} exceeds {limit:.3e}")
    return sol


def foc_gramian(g: WeightedGraph, basis: str = "eigen") -> LyapunovSolution:
    s = spectrum(g)
    s.require_connected()
    V = _basis(s, basis)
    A = -(V.T @ g.laplacian() @ V)
    P, res = solve_lyapunov(A, np.eye(V.shape[1]))
    return _check(LyapunovSolution(P, res, V, A))


def soc_gramian(s: SocSystem, basis: str = "eigen") -> LyapunovSolution:
    """Reduced Gramian on ``span{(u, 0), (0, u) : u perp 1}``."""
    sp = spectrum(s.coupling)
    sp.require_connected()
    V = _basis(sp, basis)
    k = V.shape[1]
    Lr = V.T @ s.coupling.laplacian() @ V
    damp = s.beta * (np.eye(k) if s.soc_type == 1 else Lr)
    A = np.block([[np.zeros((k, k)), np.eye(k)], [-Lr, -damp]])
    BBt = np.zeros((2 * k, 2 * k))
    BBt[k:, k:] = np.eye(k)
    P, res = solve_lyapunov(A, BBt)
    return _check(LyapunovSolution(P, res, V, A))


def _reduced_output(q: OutputGraph, V: np.ndarray) -> np.ndarray:
    return V.T @ q.laplacian @ V


def soc_channels(s: SocSystem, basis: str = "eigen") -> SocMeasure:
    sol = soc_gramian(s, basis)
    V = sol.basis
    k = V.shape[1]
    P = sol.gramian
    rho_x = float(np.sum(P[:k, :k] * _reduced_output(s.q_x, V)))
    rho_v = float(np.sum(P[k:, k:] * _reduced_output(s.q_v, V)))
    return SocMeasure(rho_x, rho_v, rho_x + rho_v)


def lyapunov_measure(system, q=None, basis: str = "eigen") -> float:
    """Measure ``Tr(P L_Q)`` from the Gramian of the disagreement network.

    ``system`` is a :class:`WeightedGraph` (first order, output ``q``), a
    :class:`FocSystem`, or a :class:`SocSystem` (both channels summed).
    """
    if isinstance(system, SocSystem):
        return soc_channels(system, basis).rho_total
    if isinstance(system, FocSystem):
        system, q = system.coupling, system.q
    sol = foc_gramian(system, basis)
    out = _coerce_output(q, system.n)
    return float(np.sum(sol.gramian * _reduced_output(out, sol.basis)))
