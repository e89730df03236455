"""Exception types shared across the package."""


class DomainError(ValueError):
    """A hyperbolic-trig evaluation left its valid domain."""


class OutOfDomain(DomainError):
    """A coordinate change produced a point outside the (c, t) chart."""


class InvalidParams(ValueError):
    """User-supplied parameters violate a stated bound."""


class NoValidRoot(ArithmeticError):
    """The systole cubic has no admissible root (K > 1)."""
