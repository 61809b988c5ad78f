"""Independent verification: Lyapunov Gramians, Monte-Carlo simulation and
exhaustive enumeration of small connected graphs."""
from .audit import AUDIT_BOUNDS, DEFAULT_BOUNDS, AuditReport, exhaustive_audit
from .enumeration import EnumerationStream, enumerate_connected, masks_to_laplacians
from .lyapunov import (
    FocSystem,
    LyapunovSolution,
    foc_gramian,
    helmert_basis,
    lyapunov_measure,
    soc_channels,
    soc_gramian,
    solve_lyapunov,
)
from .montecarlo import SimConfig, monte_carlo_measure

__all__ = [
    "AUDIT_BOUNDS",
    "DEFAULT_BOUNDS",
    "AuditReport",
    "EnumerationStream",
    "FocSystem",
    "LyapunovSolution",
    "SimConfig",
    "enumerate_connected",
    "exhaustive_audit",
    "foc_gramian",
    "helmert_basis",
    "lyapunov_measure",
    "masks_to_laplacians",
    "monte_carlo_measure",
    "soc_channels",
    "soc_gramian",
    "solve_lyapunov",
]
