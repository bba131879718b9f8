"""Exception hierarchy shared by every forcing_lab module."""


class ForcingLabError(Exception):
    """Base class for all library errors."""


class GraphError(ForcingLabError, ValueError):
    pass


class LoopEdgeError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexOutOfRangeError(GraphError):
    pass


class ParseError(ForcingLabError, ValueError):
    """Raised by the interchange-format codecs on malformed input."""


class InstanceTooLargeError(ForcingLabError):
    """An exhaustive search would exceed its documented size limit."""


class PreconditionError(ForcingLabError, ValueError):
    """The input graph does not satisfy an operation's structural hypothesis."""


class NotClawFreeCubicError(PreconditionError):
    pass


class IsK4Error(PreconditionError):
    pass


class PartitionFailureError(PreconditionError):
    pass


class HasDiamondUnitError(PreconditionError):
    pass


class NotCubicMultigraphError(PreconditionError):
    pass


class LayeringStalledError(ForcingLabError):
    """The cycle collection handed to the layering was not optimal."""


class BadParameterError(ForcingLabError, ValueError):
    pass


class KTooSmallError(BadParameterError):
    pass
