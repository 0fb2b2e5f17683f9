"""Exception types shared across the library."""


class HodgeLabError(Exception):
    """Base class for all library errors."""


class SpaceMismatchError(HodgeLabError):
    """Operands live on different spaces (dimension or backend differ)."""


class DegreeMismatchError(HodgeLabError):
    """Operands have incompatible form degrees."""


class DegreeUnderflowError(HodgeLabError):
    """An operation would produce a form of negative degree."""


class DegreeOverflowError(HodgeLabError):
    """An operation would produce a form of degree above the space dimension."""


class ContractionUnderflowError(HodgeLabError):
    """More contractions requested than either argument supports."""


class NotInLambdaPError(HodgeLabError):
    """The form fails the membership test for the real (p,0)+(0,p) subspace."""


class InvalidDerivativeError(HodgeLabError):
    """A caller-supplied derivative table violates its compatibility rule."""


class InvariantViolationError(HodgeLabError):
    """Constructor input breaks a structural invariant (e.g. a non-skew matrix)."""


class IllConditionedSpectrumError(HodgeLabError):
    """Eigenvalue clusters of a squared skew map cannot be separated reliably."""


class MomentInconsistencyError(HodgeLabError):
    """Power traces admit no nonnegative-integer-multiplicity solution."""


class InvalidFrameError(HodgeLabError):
    """A subspace frame is not orthonormal within tolerance."""


class FrameRankError(HodgeLabError):
    """A triple of complex 1-forms does not span the complexified dual."""


class FrameInconsistencyError(HodgeLabError):
    """No single unit scalar satisfies all star identities of a frame."""


class NotAValidFrameError(HodgeLabError):
    """A coframe triple violates the unitarity constraints beyond tolerance."""


class InvalidTransitionError(HodgeLabError):
    """Transition data violates its symmetry/unitarity invariants."""
