"""Exception types raised by polychern."""


class PolychernError(ValueError):
    pass


class NonGeneric(PolychernError):
    """A sign decision on the length vector hit an exact tie."""


class OverlappingSides(PolychernError):
    pass


class NonTransversal(PolychernError):
    """Two factors share two or more edges and no rewrite rule applies."""


class FreshIndexExhausted(PolychernError):
    pass


class RingMismatch(PolychernError):
    pass


class NotTopDegree(PolychernError):
    pass


class BadDegree(PolychernError):
    """Monomial exponents do not add up to n - 3."""
