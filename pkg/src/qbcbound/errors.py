"""Exception hierarchy shared by all qbcbound modules."""


class QbcError(ValueError):
    """Base class for all validation and domain errors raised by qbcbound."""


class LabelCollision(QbcError):
    """A subsystem label would occur twice."""


class LabelNotFound(QbcError):
    """A referenced subsystem label does not exist on the state."""


class DimMismatch(QbcError):
    """Matrix shapes or subsystem dimensions are inconsistent."""


class NotPure(QbcError):
    """An operation defined only for pure states received a mixed state."""


class EmptySubset(QbcError):
    """A non-empty label subset was required."""


class SpecError(QbcError):
    """Invalid block/partition specification."""


class TooLarge(QbcError):
    """Problem size exceeds the configured dimension cap."""


class DomainError(QbcError):
    """Scalar argument outside the mathematical domain of the function."""


class RootError(QbcError):
    """Root bracketing failed for a degenerate parameter set."""
