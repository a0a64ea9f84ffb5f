"""Exception hierarchy shared by all modules."""


class InertiaLabError(Exception):
    """Base class for every error raised by this package."""


class BoundExceeded(InertiaLabError):
    """A search or closure grew past its configured bound."""


class KindMismatch(InertiaLabError):
    """Group elements of incompatible kinds were mixed."""


class NotInGroup(InertiaLabError):
    pass


class NotAPGroup(InertiaLabError):
    pass


class NotNormal(InertiaLabError):
    pass


class NotAnAction(InertiaLabError):
    """The supplied generator maps do not extend to a homomorphism into Aut(N)."""


class TargetMismatch(InertiaLabError):
    pass


class NotAbelian(InertiaLabError):
    pass


class InvalidHomomorphism(InertiaLabError):
    """Generator map does not extend to a well-defined homomorphism."""


class InconsistentParameters(InertiaLabError):
    pass


class EvenOrder(InertiaLabError):
    pass


class NotASubgroupType(InertiaLabError):
    pass


class InvalidParameters(InertiaLabError):
    pass


class InvalidSpec(InertiaLabError):
    """A group/curve spec document failed validation."""


class VerificationFailed(InertiaLabError):
    """A certificate or a built-in verification check did not hold."""


class SingularCurve(InertiaLabError):
    pass


class BadReduction(InertiaLabError):
    pass


class UnsupportedPrime(InertiaLabError):
    """Arithmetic at this residue characteristic is out of scope (l = 2)."""


class PrecisionFailure(InertiaLabError):
    """Class polynomial coefficients could not be rounded unambiguously."""


class MultipleRoot(InertiaLabError):
    """The reduced j-invariant is a multiple root of the class polynomial mod p."""


class BadOrSupersingular(InertiaLabError):
    """Canonical lifting needs good ordinary reduction."""


class NonInvertibleDenominator(InertiaLabError):
    pass


class SearchExhausted(InertiaLabError):
    pass


class UnluckyUnit(InertiaLabError):
    """A quantity that must be a unit mod p was divisible by p; reseed."""


class InconclusiveSurjectivity(InertiaLabError):
    pass
