"""Exception hierarchy shared by every module of the package."""


class AntimagicError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(AntimagicError):
    """Malformed graph or labeling text, or a structurally invalid graph."""


class EmptyGraph(AntimagicError):
    pass


class NotBiregular(AntimagicError):
    pass


class Infeasible(AntimagicError):
    """A requested object cannot exist (bad generator profile, short matching)."""


class RetriesExhausted(AntimagicError):
    pass


class WrongCase(AntimagicError):
    """A case-specific routine was called on a profile it does not handle."""


class EvenComponent(AntimagicError):
    pass


class OddDegree(AntimagicError):
    pass


class OddLength(AntimagicError):
    pass


class NotTwoRegular(AntimagicError):
    pass


class WindowMismatch(AntimagicError):
    pass


class BadWindow(AntimagicError):
    pass


class RepeatedYVertex(AntimagicError):
    pass


class OddHalfLength(AntimagicError):
    pass


class LengthClassViolation(AntimagicError):
    pass


class YOverlap(AntimagicError):
    pass


class TooLarge(AntimagicError):
    pass


class ConstructionFailed(AntimagicError):
    """The constructed labeling was rejected by the verifier.

    The failing report is kept on ``self.report`` for diagnostics.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
