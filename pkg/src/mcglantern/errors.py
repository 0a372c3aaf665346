"""Exception hierarchy shared by the package."""


class MCGError(Exception):
    """Base class for all errors raised by mcglantern."""


class ParseError(MCGError, ValueError):
    """Malformed text input (surface, curve, witness or word files)."""


class InvalidPairing(MCGError, ValueError):
    pass


class GenusTooSmall(MCGError, ValueError):
    """A theorem-level operation was called on a surface of too small genus."""


class NotSimple(MCGError, ValueError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotClosed(MCGError, ValueError):
    pass


class CrossingInput(MCGError, ValueError):
    """Curves handed to a cut operation cross in the diagram."""


class InternalError(MCGError, RuntimeError):
    """An invariant that should hold by construction was violated."""


class UnsupportedRotation(MCGError, ValueError):
    pass


class NoSameHalfPair(MCGError, ValueError):
    pass


class AdjacentOnly(MCGError, ValueError):
    pass


class CertificateFailure(MCGError, RuntimeError):
    pass


class PairingMismatch(MCGError, ValueError):
    pass


class NotPrimitive(MCGError, ValueError):
    pass


class RuleError(MCGError, ValueError):
    """Missing, duplicated or conflicting mapping rules."""


class UnassignedLabel(MCGError, KeyError):
    pass


class HyperellipticExcluded(MCGError, ValueError):
    pass


class VerificationFailed(MCGError, RuntimeError):
    pass
