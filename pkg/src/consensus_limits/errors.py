"""Exception hierarchy.

Every error raised by the library derives from :class:`ConsensusError`, so
callers (and the CLI) can catch one type. Input-validation errors also
derive from :class:`ValueError`.
"""


class ConsensusError(Exception):
    """Base class for all library errors."""


class GraphError(ConsensusError, ValueError):
    """Malformed graph input."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class NonPositiveWeight(GraphError):
    pass


class IndexOutOfRange(GraphError):
    pass


class InvalidFamilyParams(GraphError):
    pass


class GraphFormatError(GraphError):
    """Unparseable edge-list or JSON graph file."""


class Disconnected(ConsensusError, ValueError):
    """The coupling graph (or a spectrum) is not connected."""


# the graph-core name for the same condition
DisconnectedGraph = Disconnected


class NotLaplacian(ConsensusError, ValueError):
    pass


class EigensolveFailure(ConsensusError, ArithmeticError):
    pass


class SpectralMismatch(ConsensusError, ArithmeticError):
    """Combinatorial and spectral connectivity tests disagree."""


class DimensionMismatch(ConsensusError, ValueError):
    pass


class WrongSocType(ConsensusError, ValueError):
    pass


class InvalidN(ConsensusError, ValueError):
    pass


class WeightedNotSupported(ConsensusError, ValueError):
    pass


class LyapunovResidualTooLarge(ConsensusError, ArithmeticError):
    pass


class UnstableStep(ConsensusError, ValueError):
    pass


class NTooLarge(ConsensusError, ValueError):
    pass


class MissingEdgeParameter(ConsensusError, ValueError):
    pass


class NotDeclaredEdgeTransitive(ConsensusError, ValueError):
    pass


class UnequalSusceptance(ConsensusError, ValueError):
    pass


class HeterogeneousDamping(ConsensusError, ValueError):
    pass
