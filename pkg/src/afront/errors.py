"""Exception types shared across the package."""


class AfrontError(Exception):
    """Base class for all library errors."""


class ZeroFunction(AfrontError):
    """Operation undefined for the identically-zero function."""


class InvalidModulus(AfrontError):
    """Torus modulus must lie in the upper half plane."""


class PoleAt(AfrontError):
    """Evaluation requested at (or too close to) a pole."""

    def __init__(self, where, message=None):
        self.where = where
        super().__init__(message or f"evaluation at pole: {where}")


class NotRegularCurve(AfrontError):
    """(dF, dG) vanishes simultaneously somewhere on the domain."""


class PoleOffPuncture(AfrontError):
    """F or G has a pole at an interior point of the domain."""


class PeriodConditionViolated(AfrontError):
    """Re of a period integral is nonzero; the height function is path dependent."""


class ConstantG(AfrontError):
    """The Gauss map dF/dG is undefined for constant G."""


class NotUnimodular(AfrontError):
    """Transform coefficients must satisfy |alpha|^2 - |beta|^2 = 1."""


class NotEmbeddedEnd(AfrontError):
    """Asymptotic models exist only for embedded ends."""


class InequalityViolated(AfrontError):
    """deg(rho) < 2(g - 1 + n); the input cannot be a complete front."""


class BracketLost(AfrontError):
    """Root bracket sign change disappeared during bisection."""


class NotBothZero(AfrontError):
    """p1 and p2 may never vanish simultaneously (excluded equianharmonic case)."""


class ConstraintViolated(AfrontError):
    """A catalog parameter constraint failed."""

    def __init__(self, constraint, message=None):
        self.constraint = constraint
        super().__init__(message or f"constraint violated: {constraint}")


class UnknownId(AfrontError):
    """No catalog entry with the requested id."""


class PoleOnCycle(AfrontError):
    """Integration cycle passes too close to a pole of the integrand."""


class EmptyMesh(AfrontError):
    """Every grid sample fell inside an exclusion zone."""
