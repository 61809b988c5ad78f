"""Steady-state performance measures, fundamental limits and sparsity
tradeoffs for first- and second-order linear consensus networks."""
from . import bounds, oracle
from ._kernels import BACKEND
from .applications import LossReport, PowerNetwork, edge_transitive_loss, power_loss, tree_loss
from .errors import ConsensusError
from .graph import (
    FAMILIES,
    GraphStats,
    WeightedGraph,
    build_graph,
    family,
    graph_from_mask,
    graph_stats,
    is_connected,
    mask_of,
)
from .io import load_graph, save_graph
from .measures import (
    OutputGraph,
    SocMeasure,
    SocSystem,
    foc_measure,
    formation_energy,
    soc_measure,
    soc_position_measure,
)
from .spectral import (
    LaplacianSpectrum,
    effective_resistance,
    pseudo_inverse,
    spectrum,
    zeta,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "FAMILIES",
    "ConsensusError",
    "GraphStats",
    "LaplacianSpectrum",
    "LossReport",
    "OutputGraph",
    "PowerNetwork",
    "SocMeasure",
    "SocSystem",
    "WeightedGraph",
    "bounds",
    "build_graph",
    "edge_transitive_loss",
    "effective_resistance",
    "family",
    "foc_measure",
    "formation_energy",
    "graph_from_mask",
    "graph_stats",
    "is_connected",
    "load_graph",
    "mask_of",
    "oracle",
    "power_loss",
    "pseudo_inverse",
    "save_graph",
    "soc_measure",
    "soc_position_measure",
    "spectrum",
    "tree_loss",
    "zeta",
]
