"""Laplacian eigendecomposition, pseudo-inverse, spectral zeta values and
effective resistances.

Everything downstream consumes a :class:`LaplacianSpectrum`; the
pseudo-inverse is always assembled from it so that it is exactly symmetric.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import Disconnected, EigensolveFailure, NotLaplacian, SpectralMismatch
from .graph import WeightedGraph, is_connected


def centering_matrix(n: int) -> np.ndarray:
    """``M_n = I - J/n``."""
    return np.eye(n) - np.full((n, n), 1.0 / n)


def check_laplacian(L: np.ndarray) -> np.ndarray:
    L = np.asarray(L, dtype=float)
    if L.ndim != 2 or L.shape[0] != L.shape[1]:
        raise NotLaplacian(f"expected a square matrix, got shape {L.shape}")
    tol = 1e-12 * np.linalg.norm(L)
    if np.max(np.abs(L - L.T), initial=0.0) > tol:
        raise NotLaplacian("matrix is not symmetric")
    if np.max(np.abs(L.sum(axis=1)), initial=0.0) > tol:
        raise NotLaplacian("row sums are not zero")
    return L


@dataclass(frozen=True)
class LaplacianSpectrum:
    """Ascending eigenvalues with paired orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    zero_tolerance: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def zero_count(self) -> int:
        return int(np.sum(self.eigenvalues <= self.zero_tolerance))

    @property
    def is_connected(self) -> bool:
        return self.zero_count == 1

    @property
    def nonzero(self) -> np.ndarray:
        return self.eigenvalues[self.eigenvalues > self.zero_tolerance]

    def require_connected(self) -> None:
        if self.zero_count != 1:
            raise Disconnected(
                f"{self.zero_count} eigenvalues below tolerance {self.zero_tolerance:.3e}"
            )


def decompose(L: np.ndarray) -> LaplacianSpectrum:
    L = check_laplacian(L)
    n = L.shape[0]
    try:
        lam, U = np.linalg.eigh(L)
    except np.linalg.LinAlgError as exc:
        raise EigensolveFailure(str(exc)) from exc
    norm = np.linalg.norm(L)
    residual = np.linalg.norm((U * lam) @ U.T - L)
    if not np.all(np.isfinite(lam)) or residual > 1e-10 * max(1.0, norm):
        raise EigensolveFailure(f"reconstruction residual {residual:.3e}")
    tau = 64 * n * np.finfo(float).eps * max(1.0, float(lam[-1]))
    if lam[0] < -tau:
        raise NotLaplacian(f"negative eigenvalue {lam[0]:.3e}: not positive semidefinite")
    return LaplacianSpectrum(lam, U, tau)


def spectrum(g: WeightedGraph) -> LaplacianSpectrum:
    """Decompose ``L_G`` and cross-check connectivity against BFS."""
    s = decompose(g.laplacian())
    if s.is_connected != is_connected(g):
        raise SpectralMismatch(
            f"BFS says connected={is_connected(g)} but the spectrum has "
            f"{s.zero_count} near-zero eigenvalues"
        )
    return s


def _as_spectrum(obj) -> LaplacianSpectrum:
    if isinstance(obj, LaplacianSpectrum):
        return obj
    if isinstance(obj, WeightedGraph):
        return spectrum(obj)
    return decompose(obj)


def pseudo_inverse(s: LaplacianSpectrum | WeightedGraph) -> np.ndarray:
    """Moore-Penrose inverse ``sum_{lambda_i > tau} u_i u_i^T / lambda_i``."""
    s = _as_spectrum(s)
    s.require_connected()
    keep = s.eigenvalues > s.zero_tolerance
    U = s.eigenvectors[:, keep]
    P = (U / s.eigenvalues[keep]) @ U.T
    return 0.5 * (P + P.T)


def zeta(s: LaplacianSpectrum | WeightedGraph, p: int = 1) -> float:
    """Spectral zeta value ``sum_{i>=2} lambda_i^{-p}``."""
    s = _as_spectrum(s)
    s.require_connected()
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    return float(math.fsum(s.nonzero ** (-float(p))))


@dataclass(frozen=True)
class ResistanceMatrix:
    entries: np.ndarray
    r_total: float

    def __getitem__(self, ij):
        return self.entries[ij]


def effective_resistance(s: LaplacianSpectrum | WeightedGraph) -> ResistanceMatrix:
    Lp = pseudo_inverse(s)
    d = np.diag(Lp)
    R = d[:, None] + d[None, :] - Lp - Lp.T
    np.fill_diagonal(R, 0.0)
    R = np.maximum(R, 0.0)
    return ResistanceMatrix(R, float(0.5 * R.sum()))


def foster_sum(g: WeightedGraph, R: ResistanceMatrix | None = None) -> float:
    """``sum_e w(e) r_e``, which is ``n - 1`` on connected graphs."""
    if R is None:
        R = effective_resistance(g)
    return float(math.fsum(w * R.entries[i, j] for i, j, w in g.edges))


def frobenius_norm(L: np.ndarray) -> float:
    return float(np.linalg.norm(np.asarray(L, dtype=float)))


def graph_frobenius_norm(g: WeightedGraph) -> float:
    """``(2 sum_e w_e^2 + sum_i d_i^2)^{1/2}`` from the edge list."""
    return math.sqrt(2.0 * math.fsum(w * w for _, _, w in g.edges) + float(np.sum(g.degrees ** 2)))


def to_json_matrix(a: np.ndarray) -> list[list[float]]:
    return [[float(x) for x in row] for row in np.asarray(a)]
