"""Exception and warning types shared across the package."""


class DistBackboneError(ValueError):
    """Base class for invalid input, configuration, or misuse of the API."""


class NegativeWeightError(DistBackboneError):
    """Distance weights must be non-negative and finite."""


class ProximityRangeError(DistBackboneError):
    """Proximity weights must lie in (0, 1]."""


class DuplicateEdgeError(DistBackboneError):
    """The same (source, target) pair appeared more than once."""


class SemanticsError(DistBackboneError):
    """Operation applied to a graph with the wrong weight semantics."""


class TooFewNodesError(DistBackboneError):
    """Statistic undefined for graphs with fewer than two nodes."""


class AlgebraLawError(DistBackboneError):
    """A path-length algebra failed its sampled law check."""


class UnknownAlgebraError(DistBackboneError):
    """No algebra registered under the requested name."""


class ClosureMismatchError(DistBackboneError):
    """Closure result does not fit the graph it was paired with."""


class NotSemiTriangularError(DistBackboneError):
    """Shortcut witness requested for an edge that is not semi-triangular."""


class SelfLoopWarning(UserWarning):
    """Self-loop edges in the input were dropped."""
