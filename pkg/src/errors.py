"""Exception hierarchy shared by the analysis modules."""


class MinpolyError(Exception):
    """Base class for all analysis errors."""

    pass


class NotInFamily(MinpolyError):
    """Raised when parameters are requested for a family the matrix is not in."""

    pass


class RankDeficientFactorization(MinpolyError):
    """Raised when an SO(4) coefficient array is not rank one."""

    pass


class RankDecisionAmbiguous(MinpolyError):
    """Raised when a Gram eigenvalue sits too close to the rank threshold."""

    pass


class ScalarInput(MinpolyError):
    """Raised when an operation needs a non-scalar matrix."""

    pass


class SpectrumContainsMinusOne(MinpolyError):
    """Raised when the Cayley transform is undefined."""

    pass


class ConsistencyViolation(MinpolyError):
    """Raised when a proven internal invariant fails (an implementation bug)."""

    pass


class UnsupportedGrade(MinpolyError):
    """Raised when Cl(0,6) coefficients fall outside the antisymmetric grades."""

    pass


class ZeroProduct(MinpolyError):
    """Raised when an octonion product vanishes."""

    pass


class MatrixParseError(MinpolyError):
    """Raised when an input matrix file cannot be parsed."""

    pass
