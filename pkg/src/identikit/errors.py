"""Exception types shared across the package."""


class IdentikitError(Exception):
    """Base class for all package-specific errors."""


class UnknownVertex(IdentikitError):
    """An operation referenced a vertex id that is not in the graph."""


class SameVertex(IdentikitError):
    """An identification named the same vertex twice."""


class MalformedWitness(IdentikitError):
    """Witness bags violate the structural preconditions (as opposed to
    merely failing the adjacency conditions, which is a ``False`` result)."""


class EmptyComponent(IdentikitError):
    """Diameter was requested for an empty vertex set."""


class BudgetExceeded(IdentikitError):
    """An oracle enumeration hit its safety cap."""


class TargetNotTree(IdentikitError):
    """The target passed to a tree solver is not a (rooted) tree."""


class TargetNotForest(IdentikitError):
    """The target passed to the forest solver is not a forest."""


class DisconnectedInput(IdentikitError):
    """A solver that requires a connected input got a disconnected graph."""


class NotACliqueOutsideS(IdentikitError):
    """Constrained clique kernel: ``G - S`` is not a clique."""


class CapacityMismatch(IdentikitError):
    """Bin-packing generator: item sizes do not fill the bins exactly."""


class PreconditionViolated(IdentikitError):
    """A generator precondition on the source instance does not hold."""


class GraphFormatError(IdentikitError):
    """The graph (or witness) text input could not be parsed."""
