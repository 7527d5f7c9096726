"""Exception hierarchy shared by all parflex modules."""


class ParflexError(Exception):
    """Base class for every error raised by parflex."""


class GraphError(ParflexError):
    """Malformed graph input (loops, multi-edges, unknown endpoints)."""


class DisconnectedGraphError(GraphError):
    """An analysis that needs a connected graph received a disconnected one."""


class FrameworkError(ParflexError):
    """Placement does not fit the graph or violates a placement invariant."""


class PartitionError(ParflexError):
    """An edge partition does not match the graph it is used with."""


class WalkIndependenceError(ParflexError):
    """An operation needs walk-independence but it does not hold."""


class RigidError(ParflexError):
    """The requested construction needs at least two classes."""


class SymmetryError(ParflexError):
    """A cyclic action is malformed or does not act on the framework."""


class ConsistencyError(ParflexError):
    """Internal post-condition failed; indicates a bug upstream."""


class DocumentError(ParflexError):
    """A framework document could not be parsed or validated."""


class TilingError(ParflexError):
    """Unknown tiling or invalid tiling parameters."""
