"""Exception hierarchy shared by every module."""


class ProjkinError(Exception):
    """Base class for all library errors."""


class DomainError(ProjkinError, ValueError):
    """An argument lies outside the domain of the requested map."""


class ProjectiveInfinity(ProjkinError, ArithmeticError):
    """A point was sent to (or lies at) projective infinity."""


class NonOrthogonal(ProjkinError, ArithmeticError):
    """A matrix could not be brought back onto the signature-orthogonal group."""


class ConvergenceFailure(ProjkinError, RuntimeError):
    """An iterative procedure failed to meet its tolerance."""


class NoRealIntersection(DomainError):
    """A line misses the absolute (negative discriminant)."""


class DegenerateChord(DomainError):
    """A line is tangent to the absolute."""
