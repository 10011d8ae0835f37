class OpcatError(Exception):
    """Base class for all errors raised by opcat."""


class ShapeError(OpcatError, ValueError):
    pass


class FieldError(OpcatError, ValueError):
    pass


class NumericError(OpcatError, ArithmeticError):
    pass


class DomainError(OpcatError, ValueError):
    """A morphism or cone violates one of its defining inclusions."""


class CompositionError(OpcatError, ValueError):
    pass


class OrderError(OpcatError, ValueError):
    """An operation needs ``M <= N`` and it does not hold."""


class ReconstructionError(OpcatError, ValueError):
    pass
