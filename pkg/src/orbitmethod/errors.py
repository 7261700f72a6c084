"""Exception hierarchy; the CLI echoes the class name on failure."""


class ComputationError(Exception):
    """Base for every error raised by a library computation."""


class DimensionMismatch(ComputationError, ValueError):
    pass


class EmptyInput(ComputationError, ValueError):
    pass


class SquareMismatch(ComputationError):
    """y^2 differs from exp(2 pi i lambda)."""


class NotInNonIdentityComponent(ComputationError):
    pass


class UnsupportedGroup(ComputationError):
    pass


class NormalizationViolated(ComputationError):
    pass


class UnsupportedGeometry(ComputationError):
    pass


class BlockMismatch(ComputationError):
    pass


class SL2NotInLevi(ComputationError):
    """The SL(2)-part does not commute with the image of C^x."""


class InvalidParameter(ComputationError):
    pass


class UnsupportedFixture(ComputationError):
    pass
