"""Steady-state performance measures of first- and second-order consensus
networks, computed from ``L_Q`` and the coupling-graph pseudo-inverse.

The output matrix ``C_Q`` is never formed; only ``L_Q = C_Q^T C_Q`` is used.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, NamedTuple

import numpy as np

from .errors import DimensionMismatch, NotLaplacian, WrongSocType
from .graph import WeightedGraph
from .spectral import (
    LaplacianSpectrum,
    centering_matrix,
    check_laplacian,
    pseudo_inverse,
    spectrum,
    zeta,
)

OutputKind = Literal["centering", "explicit-graph"]


@dataclass(frozen=True)
class OutputGraph:
    """Laplacian of a (possibly disconnected) output graph."""

    laplacian: np.ndarray
    kind: OutputKind = "explicit-graph"

    @property
    def n(self) -> int:
        return self.laplacian.shape[0]

    @classmethod
    def centering(cls, n: int) -> "OutputGraph":
        return cls(centering_matrix(n), "centering")

    @classmethod
    def zero(cls, n: int) -> "OutputGraph":
        return cls(np.zeros((n, n)), "explicit-graph")

    @classmethod
    def from_graph(cls, q: WeightedGraph) -> "OutputGraph":
        return cls(q.laplacian(), "explicit-graph")

    @classmethod
    def from_matrix(cls, L) -> "OutputGraph":
        L = check_laplacian(L)
        w = np.linalg.eigvalsh(L) if L.size else np.zeros(0)
        tau = 64 * L.shape[0] * np.finfo(float).eps * max(1.0, float(w[-1]) if w.size else 1.0)
        if w.size and w[0] < -tau:
            raise NotLaplacian("output Laplacian is not positive semidefinite")
        return cls(L, "explicit-graph")

    @property
    def weight_sum(self) -> float:
        """``W(Q) = Tr(L_Q) / 2``."""
        return 0.5 * float(np.trace(self.laplacian))


def _coerce_output(q, n: int) -> OutputGraph:
    if q is None or (isinstance(q, str) and q == "centering"):
        return OutputGraph.centering(n)
    if isinstance(q, OutputGraph):
        out = q
    elif isinstance(q, WeightedGraph):
        out = OutputGraph.from_graph(q)
    else:
        out = OutputGraph.from_matrix(q)
    if out.n != n:
        raise DimensionMismatch(f"output graph has {out.n} nodes, coupling graph has {n}")
    return out


def _spectrum(g: WeightedGraph | LaplacianSpectrum) -> LaplacianSpectrum:
    return g if isinstance(g, LaplacianSpectrum) else spectrum(g)


def foc_measure(g: WeightedGraph | LaplacianSpectrum, q=None) -> float:
    """``rho_ss = Tr(L_Q L_G^+) / 2``; ``q`` defaults to the centering graph."""
    s = _spectrum(g)
    s.require_connected()
    q = _coerce_output(q, s.n)
    if q.kind == "centering":
        return 0.5 * zeta(s, 1)
    return 0.5 * float(np.sum(q.laplacian * pseudo_inverse(s)))


@dataclass(frozen=True)
class SocSystem:
    """Second-order network: coupling graph, type (1 or 2), damping and outputs.

    ``q_x``/``q_v`` accept an :class:`OutputGraph`, a :class:`WeightedGraph`,
    a Laplacian array, ``"centering"`` or ``None`` (unmeasured channel).
    """

    coupling: WeightedGraph
    soc_type: int
    beta: float = 1.0
    q_x: OutputGraph = field(default=None)
    q_v: OutputGraph = field(default=None)

    def __post_init__(self):
        if self.soc_type not in (1, 2):
            raise WrongSocType(f"soc_type must be 1 or 2, got {self.soc_type!r}")
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        n = self.coupling.n
        for name in ("q_x", "q_v"):
            q = getattr(self, name)
            q = OutputGraph.zero(n) if q is None else _coerce_output(q, n)
            object.__setattr__(self, name, q)


class SocMeasure(NamedTuple):
    rho_x: float
    rho_v: float
    rho_total: float


def soc_measure(s: SocSystem, spec: LaplacianSpectrum | None = None) -> SocMeasure:
    sp = spec if spec is not None else spectrum(s.coupling)
    sp.require_connected()
    b = s.beta
    Lp = pseudo_inverse(sp)
    if s.soc_type == 1:
        if s.q_x.kind == "centering":
            rho_x = zeta(sp, 1) / (2 * b)
        else:
            rho_x = float(np.sum(s.q_x.laplacian * Lp)) / (2 * b)
        rho_v = float(np.trace(s.q_v.laplacian)) / (2 * b)
    else:
        if s.q_x.kind == "centering":
            rho_x = zeta(sp, 2) / (2 * b)
        else:
            rho_x = float(np.sum(s.q_x.laplacian * (Lp @ Lp))) / (2 * b)
        if s.q_v.kind == "centering":
            rho_v = zeta(sp, 1) / (2 * b)
        else:
            rho_v = float(np.sum(s.q_v.laplacian * Lp)) / (2 * b)
    return SocMeasure(rho_x, rho_v, rho_x + rho_v)


def soc_position_measure(g: WeightedGraph | LaplacianSpectrum, beta: float = 1.0) -> float:
    """Type-2 measure with centering position output, ``zeta(2) / (2 beta)``."""
    return zeta(_spectrum(g), 2) / (2 * beta)


def formation_energy(s: SocSystem) -> float:
    """Expected extra kinetic energy of a Type-2 formation.

    This is the velocity-channel measure with centering output,
    ``zeta(1) / (2 beta)``; the outputs stored on ``s`` are not consulted.
    """
    if s.soc_type != 2:
        raise WrongSocType("formation energy is defined for Type 2 networks")
    return zeta(spectrum(s.coupling), 1) / (2 * s.beta)
