"""Exception types raised across the package."""


class UltraposetError(Exception):
    """Base class for every error raised by :mod:`ultraposets`."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CycleError(UltraposetError, ValueError):
    """The reflexive-transitive closure of a relation is not antisymmetric."""


class NotALattice(UltraposetError, ValueError):
    """Some pair of elements lacks a meet or a join."""


class NotDistributive(UltraposetError, ValueError):
    """A lattice fails distributivity; ``witness`` is the offending triple."""


class NotMonotone(UltraposetError, ValueError):
    pass


class NotDisjoint(UltraposetError, ValueError):
    pass


class OrderError(UltraposetError, ValueError):
    pass


class ShapeError(UltraposetError, ValueError):
    pass


class BudgetExceeded(UltraposetError, RuntimeError):
    """An exhaustive search would exceed its configured enumeration cap."""


class TheoremViolation(UltraposetError, AssertionError):
    """A property that is a theorem of the theory failed.

    Always a bug in a construction, never a user error.
    """


class IsoFailure(TheoremViolation):
    pass


class LosFailure(TheoremViolation):
    pass


class FormatError(UltraposetError, ValueError):
    """An input file is not valid JSON or does not follow the expected schema."""
