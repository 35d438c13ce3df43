"""Exception hierarchy for lambdatree."""


class LambdaTreeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGeneratorError(LambdaTreeError, ValueError):
    pass


class NoParentError(LambdaTreeError, ValueError):
    """The identity (root) has no parent."""


class CapacityError(LambdaTreeError):
    """Requested tree depth exceeds the configured cap."""


class EmptyInteriorError(LambdaTreeError, ValueError):
    pass


class UnsupportedRegimeError(LambdaTreeError, ValueError):
    """Raised outside the verified regime k = 2, |A| = 1."""


class BoundaryDifferenceError(LambdaTreeError, ValueError):
    """Two configurations differ too close to the boundary of V_n."""


class ParseError(LambdaTreeError, ValueError):
    pass
