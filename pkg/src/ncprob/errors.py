"""Exception types shared across the package.

Each error carries the CLI exit code used by the command-line front end.
"""


class NcprobError(Exception):
    exit_code = 1


class ParseError(NcprobError):
    """Malformed text input: words, bar expressions, state files, flags."""

    exit_code = 2


class DegreeExceeded(NcprobError):
    """A computation needs moments or coefficients beyond the stored degree."""

    exit_code = 3


class KindMismatch(NcprobError):
    """A functional of the wrong kind was passed (character vs infinitesimal)."""

    exit_code = 4


class UnknownSuite(NcprobError):
    """The verification harness was asked for a suite it does not define."""

    exit_code = 5


class BasisMismatch(NcprobError):
    """Linear-combination operands live over different basis kinds."""


class MixedFlavor(BasisMismatch):
    """Ordered and commutative bar monomials were combined."""


class IndexOutOfRange(NcprobError):
    """A subset refers to positions outside the word."""


class CapExceeded(NcprobError):
    """Enumeration size exceeds the configured cap."""


class UnitInput(NcprobError):
    """Half-coproducts are only defined on the augmentation ideal."""


class UndefinedBoundary(NcprobError):
    """The half-shuffle of two counit-normalized functionals is undefined."""


class NotAdapted(NcprobError):
    """A block splitting does not satisfy the adaptedness condition."""


class NonUnital(NcprobError):
    """Inversion requires a functional taking value 1 on the unit."""


class NotSymmetric(NcprobError):
    """Classical convolution requires letter-order-invariant moment tables."""
