# models/errors.py
# exception hierarchy for mapforge

class MapForgeError(Exception):
    """base class for every error raised by mapforge"""


# --- map validation ---

class NotInvolution(MapForgeError, ValueError):
    """alpha composed with itself is not the identity"""


class FixedPointInAlpha(MapForgeError, ValueError):
    """an edge pairs a dart with itself"""


class BadDartCount(MapForgeError, ValueError):
    """a map needs a positive even number of darts"""


class NotConnected(MapForgeError, ValueError):
    """sigma and alpha do not act transitively on the darts"""


class BadRoot(MapForgeError, ValueError):
    """root dart is missing or points at the wrong kind of dart"""


class ConventionError(MapForgeError):
    """internal consistency failure (e.g. non-integral genus)"""


# --- structural predicates ---

class NotBicolorable(MapForgeError, ValueError):
    pass


class NotFourValent(MapForgeError, ValueError):
    pass


class NotUnicellular(MapForgeError, ValueError):
    pass


class UnbalancedStems(MapForgeError, ValueError):
    """buds and leaves do not cancel along the contour"""


class NotWellRooted(MapForgeError, ValueError):
    pass


class NotSchemeRooted(MapForgeError, ValueError):
    pass


class NotRootable(MapForgeError, ValueError):
    pass


class DomainError(MapForgeError, ValueError):
    """input outside the domain of the operation"""


class CyclicOffsetGraph(MapForgeError):
    pass


class InconsistentNaming(MapForgeError, ValueError):
    pass


class HeightMismatch(MapForgeError, ValueError):
    """walk does not connect the requested endpoint labels"""


# --- series & algebra ---

class NonContracting(MapForgeError):
    pass


class BadInterval(MapForgeError, ValueError):
    pass


class ConversionFailure(MapForgeError):
    pass


# --- search & io ---

class ResourceLimit(MapForgeError):
    """search exceeded the configured node budget or size bound"""


class ParseError(MapForgeError, ValueError):
    pass


class CounterexampleFound(MapForgeError):
    """a verification found an object violating the checked identity"""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
