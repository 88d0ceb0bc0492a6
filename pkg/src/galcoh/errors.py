"""Exception types shared across the package."""


class GalcohError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(GalcohError, ValueError):
    """Operands live in spaces of different (ambient) dimension."""


class ModelMismatch(GalcohError, ValueError):
    """A ring element does not belong to the model it was used with."""


class IncompleteData(GalcohError, ValueError):
    """A verification was requested for degrees the supplied data lacks."""


class PreconditionFailure(GalcohError, ValueError):
    """A checker was invoked on inputs that do not satisfy its hypotheses."""


class InvalidInput(GalcohError, ValueError):
    """Malformed file, descriptor, or construction argument."""
