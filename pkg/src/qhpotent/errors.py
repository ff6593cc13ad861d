"""Exception hierarchy shared by every module."""


class QuaternionCensusError(Exception):
    """Base class for all errors raised by :mod:`qhpotent`."""


class NotPrime(QuaternionCensusError, ValueError):
    """The modulus is not an odd prime."""


class NotInvertible(QuaternionCensusError, ZeroDivisionError):
    """Zero has no multiplicative inverse or order."""


class ModulusMismatch(QuaternionCensusError, ValueError):
    """Operands live over different prime fields."""


class BruteLimit(QuaternionCensusError):
    """An exhaustive scan was requested above the configured prime limit."""


class InvalidIndex(QuaternionCensusError, ValueError):
    """A potency index or exponent is outside the supported range."""


class NilpotentClass(QuaternionCensusError, ValueError):
    """The (trace, norm) pair (0, 0) holds only nilpotents and has no potency index."""
