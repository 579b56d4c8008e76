"""Exception hierarchy shared by all heisenrep modules."""


class HeisenrepError(Exception):
    """Base class for all library errors."""


class ConfigurationError(HeisenrepError, ValueError):
    """Invalid grid, suite, or algorithm configuration."""


class GridMismatchError(HeisenrepError, ValueError):
    """Two sampled functions live on different grids."""


class CapabilityError(HeisenrepError, ValueError):
    """Requested operation exceeds a descriptor's smoothness or order budget."""


class NotExactlyIntegrable(HeisenrepError, TypeError):
    """Descriptor has no closed-form moment; caller should fall back to quadrature."""


class ClassMembershipError(HeisenrepError, ValueError):
    """A function failed a class certification (support or moment defect)."""


class SemigroupDomainError(HeisenrepError, ValueError):
    """Group element lies outside the semigroup required by the operation."""


class PrecisionError(HeisenrepError, ValueError):
    """Grid-mode operation requested with a non-commensurate parameter."""
