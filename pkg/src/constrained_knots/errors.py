class KnotError(ValueError):
    """Base class for data errors (bad parameters, malformed input)."""


class NotCoprime(KnotError):
    pass


class InvalidParameters(KnotError):
    pass


class TorsionMismatch(KnotError):
    pass


class NonExactDivision(KnotError):
    pass


class TorsionTarget(KnotError):
    pass


class AmbientMismatch(KnotError):
    pass


class DegenerateNorm(KnotError):
    def __init__(self, msg, width=None, top_rank=None):
        super().__init__(msg)
        self.width = width
        self.top_rank = top_rank


class NotIdentifiable(KnotError):
    pass


class NotLensSpace(KnotError):
    pass


class UnknownCase(KnotError):
    pass


class NotSimple(KnotError):
    pass


class NotOneBridgeEligible(KnotError):
    pass


class NonSymmetricInput(KnotError):
    pass
