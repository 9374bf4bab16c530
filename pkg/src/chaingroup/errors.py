"""Exception hierarchy shared by every module of the package."""


class ChainGroupError(Exception):
    """Base class for all errors raised by chaingroup."""


# forests

class ParseError(ChainGroupError):
    pass


class LabelOutOfRange(ChainGroupError):
    pass


class DuplicateEdge(ChainGroupError):
    pass


class SelfLoop(ChainGroupError):
    pass


class CycleDetected(ChainGroupError):
    pass


class NotASubgraph(ChainGroupError):
    pass


class InvalidSpec(ChainGroupError):
    pass


# permutations and groups

class SizeMismatch(ChainGroupError):
    """Operands live on different degrees."""


class PointOutOfRange(ChainGroupError):
    pass


class RepeatedPoint(ChainGroupError):
    pass


class CapExceeded(ChainGroupError):
    """Raised when a brute-force enumeration would exceed its element cap."""

    def __init__(self, cap, message=None):
        super().__init__(message or f"group has more than {cap} elements")
        self.cap = cap


class NotAbelian(ChainGroupError):
    pass


# census

class LimitExceeded(ChainGroupError):
    pass


class UnknownTheorem(ChainGroupError):
    pass
