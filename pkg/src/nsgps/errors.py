"""Exception types shared across the package.

Every domain error raised by the library derives from NumericalSemigroupError,
so callers (and the CLI) can distinguish "bad mathematical input" from plain
bugs.
"""


class NumericalSemigroupError(Exception):
    """Base class for all domain errors."""


class EmptyInput(NumericalSemigroupError):
    """No generators were given."""


class NotNumerical(NumericalSemigroupError):
    """gcd of the generators is not 1, so the monoid is not cofinite."""


class NotMember(NumericalSemigroupError):
    """An element required to be in the semigroup is not."""


class Underdetermined(NumericalSemigroupError):
    """Operation needs at least two minimal generators."""


class NotSpecialGap(NumericalSemigroupError):
    """The element is not a special gap, so adding it breaks closure."""


class NotMinimalGenerator(NumericalSemigroupError):
    """The element is not a minimal generator, so removing it breaks closure."""


class NotAPermutation(NumericalSemigroupError):
    """An arrangement must be a permutation of the generating set."""


class TooManyGenerators(NumericalSemigroupError):
    """Arrangement search refused: too many generators."""


class NotFree(NumericalSemigroupError):
    """The arrangement is not free."""


class DimensionMismatch(NumericalSemigroupError):
    """Factorization vectors live in spaces of different dimension."""


class HalfFactorial(NumericalSemigroupError):
    """Delta set is empty (only happens for the full monoid of naturals)."""


class GcdNotOne(NumericalSemigroupError):
    """Characteristic sequence does not reach gcd 1."""


class NonIncreasing(NumericalSemigroupError):
    """Newton-Puiseux exponent sequence fails its monotonicity requirement."""


class NotDeltaSequence(NumericalSemigroupError):
    """The sequence is not the r-sequence of a curve with one place at infinity."""


class ResourceLimit(NumericalSemigroupError):
    """An enumeration exceeded its configured resource cap."""


class DiagnosticOverflow(NumericalSemigroupError):
    """An internal search frontier grew past its safety cap."""


class Overflow(NumericalSemigroupError):
    """Checked arithmetic overflow."""
