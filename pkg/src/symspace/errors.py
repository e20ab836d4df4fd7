"""Exception hierarchy shared by all modules."""


class SymspaceError(Exception):
    """Base class for every error raised by this package."""


class SpecError(SymspaceError, ValueError):
    """Invalid space specification."""


class UnsupportedFamily(SpecError):
    pass


class DegenerateParams(SpecError):
    """The requested space would be compact, flat or is otherwise malformed."""


class ClosureViolation(SymspaceError):
    """A commutator left the span of the algebra basis."""


class InvolutionNotDiagonalizable(SymspaceError):
    pass


class MaximalityFailure(SymspaceError):
    pass


class ClusteringAmbiguity(SymspaceError):
    pass


class DegenerateWitness(SymspaceError):
    pass


class ChamberViolation(SymspaceError):
    pass


class NotInP(SymspaceError, ValueError):
    pass


class DegeneratePlane(SymspaceError, ValueError):
    pass


class NonpositiveScale(SymspaceError, ValueError):
    pass


class DomainError(SymspaceError, ValueError):
    pass


class NotSymmetric(SymspaceError, ValueError):
    pass


class NotTraceless(SymspaceError, ValueError):
    pass


class NotSPD(SymspaceError, ValueError):
    pass


class StepTooLarge(SymspaceError):
    """Richardson extrapolation of a finite-difference Laplacian is unstable."""


class InsufficientSamples(UserWarning):
    """Monte Carlo relative standard error above 50%."""
