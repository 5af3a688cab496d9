"""Exception hierarchy shared by every module of the package."""


class HTrigError(ValueError):
    """Base class for all domain errors raised by :mod:`htrig`."""


class InvalidH(HTrigError):
    """The deformation parameter is not admissible (need h > -1, h != 0)."""


class GridMisalignment(HTrigError):
    """An interval or node set does not lie on the h-grid."""


class SingularD(HTrigError):
    """A divided-difference denominator vanishes (repeated or aliased nodes)."""


class SingularMatrix(HTrigError):
    """A collocation determinant is numerically zero."""


class ComplexResidue(HTrigError):
    """A quantity that must be real carries a non-negligible imaginary part."""


class WindowViolation(HTrigError):
    """Knot or node span reaches the window length 2*pi*h/ln(1+h)."""


class OrderOutOfRange(HTrigError):
    """Spline order or index falls outside the knot vector or the order cap."""


class InsufficientKnots(HTrigError):
    """Not enough knots on either side of a Marsden interval."""
