"""Exception hierarchy shared by every module of the package."""


class HararyError(Exception):
    """Base class for all errors raised by this package."""


class NotATree(HararyError):
    """Edge set does not describe a tree (wrong count, cycle, duplicate, disconnected)."""


class BadLabel(HararyError):
    """A vertex label lies outside ``0..n-1``."""


class InternalInconsistency(HararyError):
    """Two independent computations of the same quantity disagree."""


class OutOfRange(HararyError):
    """A numeric parameter lies outside its admissible range."""


class BadSpec(HararyError):
    """A tree-family description violates the family's constraints."""


class IdentityViolated(HararyError):
    def __init__(self, message, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right


class NotApplicable(HararyError):
    """A transformation's structural precondition does not hold."""


class BadVertex(HararyError):
    pass


class LengthMismatch(HararyError):
    pass


class SumMismatch(HararyError):
    pass


class AtBottom(HararyError):
    """The partition is already balanced; nothing it majorizes remains."""


class InconsistentClass(HararyError):
    pass


class EmptyClass(HararyError):
    pass


class UnknownClaim(HararyError):
    pass


class ParseError(HararyError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
