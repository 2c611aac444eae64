"""Exception hierarchy.

Every error raised for an input outside an operation's domain derives from
``DomainError``; the CLI maps those to exit code 3.
"""


class BispinorError(Exception):
    pass


class DomainError(BispinorError, ValueError):
    pass


class ChiralityMismatch(DomainError):
    pass


class ZeroMass(DomainError):
    pass


class DegenerateInput(DomainError):
    pass


class NullMomentum(DomainError):
    pass


class NotHermitian(DomainError):
    pass


class ZeroMomentum(DomainError):
    pass


class NotNormalized(DomainError):
    pass


class OutOfRange(DomainError):
    pass


class NotSpecialUnitary(DomainError):
    pass


class NotNullNorm(DomainError):
    pass


class DegeneratePair(DomainError):
    pass


class NoSolution(DomainError):
    pass


class ZeroOmega(DomainError):
    pass


class ZeroTwistor(DomainError):
    pass


class NotDegenerate(DomainError):
    pass


class ZeroMatrix(DomainError):
    pass


class ExcludedLine(DomainError):
    """Raised when a twistor would lie on the line omega_bar = 0 removed from P^3."""
