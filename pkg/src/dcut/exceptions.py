class DCutError(Exception):
    """Base class for errors raised by :mod:`dcut`."""


class GraphFormatError(DCutError, ValueError):
    """A graph or instance file could not be decoded.

    ``offset`` is the byte (or line) position of the first bad token, when known.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class PreconditionError(DCutError, ValueError):
    """The input is outside the class a solver was written for.

    ``evidence`` carries whatever witnessed the violation, e.g. the vertices of
    an induced P5 or a pair of vertices at distance 3.
    """

    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = evidence


class DominatingStructureNotFound(PreconditionError):
    """No dominating clique or dominating induced C5 exists (input not P5-free)."""


class Unsupported(DCutError):
    def __init__(self, graph_class, n):
        super().__init__(f"no algorithm applies to a {graph_class} graph on {n} vertices")
        self.graph_class = graph_class
        self.n = n


class OracleGuardExceeded(DCutError):
    def __init__(self, size, guard):
        super().__init__(f"instance size {size} exceeds exhaustive-search guard {guard}")
        self.size = size
        self.guard = guard


class OracleTimeout(DCutError):
    pass


class InvariantViolation(DCutError, AssertionError):
    """A structural property the algorithms rely on did not hold.

    Signals either a bug or an input outside the solver's class.
    """
