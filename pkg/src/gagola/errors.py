"""Exception hierarchy shared by all gagola modules.

Every error raised on a documented failure path derives from GagolaError,
so callers (and the CLI) can distinguish contract violations from plain
Python bugs.  Errors marked "bug signal" in docstrings are raised only
when an internal cross-check fails; seeing one means the implementation
is wrong, not the input.
"""


class GagolaError(Exception):
    pass


# -- finite fields ----------------------------------------------------------

class NonPrimeCharacteristic(GagolaError):
    pass


class ReduciblePolynomial(GagolaError):
    pass


class MixedFields(GagolaError):
    pass


class ZeroInverse(GagolaError):
    pass


class ZeroElement(GagolaError):
    pass


class ZeroScalar(GagolaError):
    pass


class SingularMatrix(GagolaError):
    pass


# -- integer arithmetic -----------------------------------------------------

class Overflow(GagolaError):
    """Value left the 64-bit contract range."""


class NotDivisor(GagolaError):
    pass


# -- group engine -----------------------------------------------------------

class CapExceeded(GagolaError):
    """Materialization would pass the configured cap."""


class IncompatibleElements(GagolaError):
    pass


class NotNormal(GagolaError):
    pass


class PNotDividing(GagolaError):
    pass


class HypothesisViolated(GagolaError):
    """A checker's stated hypotheses fail; detail names the first offender."""


# -- character tables -------------------------------------------------------

class PrimeSearchExceeded(GagolaError):
    pass


class LiftInconsistent(GagolaError):
    """Bug signal: the exact lift disagrees with its mod-p source."""


class MultipleGagolaCharacters(GagolaError):
    """Bug signal: contradicts uniqueness of the Gagola character."""


class AbelianGroup(GagolaError):
    pass


# -- pair certification -----------------------------------------------------

class TrivialOrFull(GagolaError):
    pass


class ConditionDisagreement(GagolaError):
    """Bug signal: the equivalent Camina conditions disagreed."""


class DAndEDisagree(GagolaError):
    """Bug signal: character-table route and structural route disagree."""


class NotTwoGagola(GagolaError):
    pass


class NotFrobeniusComplement(GagolaError):
    pass


# -- Suzuki 2-groups --------------------------------------------------------

class InvalidTheta(GagolaError):
    """The field automorphism must have odd order greater than 1."""


class NotAutomorphism(GagolaError):
    """Bug signal: a constructed map fails the homomorphism property."""


class RelationFailed(GagolaError):
    """Bug signal: a conjugation relation failed; carries a witness."""


class UnsupportedN(GagolaError):
    pass


# -- CLI --------------------------------------------------------------------

class ParseError(GagolaError):
    pass


class UnknownSuite(GagolaError):
    pass
