"""Exception types shared across the package."""


class FlagcyError(Exception):
    """Base class for every error raised by this library."""


class InvalidRank(FlagcyError):
    """Rank outside the admissible range for the requested family."""


class DimensionMismatch(FlagcyError):
    """Vectors from incompatible spaces were combined."""


class IndexOutOfRange(FlagcyError):
    """A simple-root index is not valid for the given flag."""


class NotKahler(FlagcyError):
    """A class required to be Kahler has a nonpositive coefficient."""


class NotIntegral(FlagcyError):
    """An integral class was required but a non-integer showed up."""


class PicardRankOne(FlagcyError):
    """The degree-zero Picard lattice is trivial for Picard rank one."""


class NotPrimitive(FlagcyError):
    """A line bundle has nonzero degree where a primitive one is required."""

    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"bundle {index} is not primitive (nonzero degree)")


class TrivialBundle(FlagcyError):
    """A nontrivial line bundle was required."""

    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"bundle {index} is trivial")


class InvalidParameter(FlagcyError):
    """A construction parameter is outside its admissible range."""


class OddCount(FlagcyError):
    """A torus fiber needs an even number of curvature classes."""


class NotProportional(FlagcyError):
    """Two classes expected to be proportional are not."""


class UnsupportedType(FlagcyError):
    """The requested operation is implemented for type A only."""


class IllConditioned(FlagcyError):
    """A numeric linear system is too close to singular to trust."""
