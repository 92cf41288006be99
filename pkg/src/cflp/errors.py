"""Exception types raised across the package."""


class CflpError(Exception):
    """Base class for all package errors."""


class NegativeBaseEvenRoot(CflpError, ValueError):
    """A negative base was raised to an exponent with an even denominator."""


class DomainError(CflpError, ValueError):
    """An argument lies outside the region where a formula is defined."""


class PochhammerPole(CflpError, ZeroDivisionError):
    """A lower hypergeometric parameter hit zero before the series terminated."""


class NonCommensurate(CflpError, ValueError):
    """An exponent is not a nonnegative integer multiple of the order alpha."""


class NoConvergence(CflpError, RuntimeError):
    """An iterative method exhausted its iteration budget."""


class SingularSystem(CflpError, ArithmeticError):
    """Gaussian elimination met a negligible pivot."""


class IllPosed(CflpError, ValueError):
    """A collocation row would evaluate a negative power at the origin."""


class FractionalIC(CflpError, ValueError):
    """A classical initial derivative was requested from a basis with fractional powers below it."""


class ProblemParseError(CflpError, ValueError):
    """A problem file is malformed; ``field`` names the offending key."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")
