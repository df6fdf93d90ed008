"""Exception hierarchy shared by all hrruns modules."""


class HRRunsError(Exception):
    """Base class for every error raised by this package."""


class CapacityError(HRRunsError, ValueError):
    """Requested size is outside the configured enumeration cap."""


class DomainError(HRRunsError, ValueError):
    """Argument is outside the domain of the operation."""


class FamilyError(HRRunsError, TypeError):
    """Operation applied to a word or tree of the wrong family."""


class StructureError(HRRunsError, ValueError):
    """Malformed tree structure (cycle, duplicate label, dangling child...)."""


class DivisibilityError(HRRunsError, ArithmeticError):
    """Polynomial division is not exact over the integers."""


class BasisError(HRRunsError, ValueError):
    """Polynomial cannot be expanded in the requested basis."""


class InvariantError(HRRunsError, AssertionError):
    """An internal invariant failed; this signals an implementation bug."""


class PreconditionError(HRRunsError, ValueError):
    """A documented precondition of the operation does not hold."""


class RegistryError(HRRunsError, KeyError):
    """Unknown identity or sequence id."""


class FixtureError(HRRunsError, ValueError):
    """A bundled or user supplied fixture file cannot be parsed."""
