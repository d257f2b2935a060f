"""Exception types raised across the package."""


class OrdmixError(Exception):
    """Base class for all package errors."""


class DomainError(OrdmixError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class SupportExhausted(OrdmixError, ArithmeticError):
    """Survival probability is zero, so a hazard or residual quantity is undefined."""


class UnsupportedOrder(OrdmixError):
    pass


class UnsupportedCoupling(OrdmixError):
    pass


class WrongCoupling(OrdmixError, ValueError):
    pass


class EmptySample(OrdmixError, ValueError):
    pass


class NonConvergence(OrdmixError, ArithmeticError):
    pass
