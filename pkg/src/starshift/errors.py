"""Exception types shared across the package."""


class StarshiftError(Exception):
    """Base class for all package-specific errors."""


class SizeLimitError(StarshiftError):
    """A requested computation exceeds a configured size cap."""


class NotInLanguageError(StarshiftError):
    """A word is outside the language of the substitutive shift."""


class MarginExhaustedError(StarshiftError):
    """A window is too small to determine the requested quantity."""


class NotLevelTwoTrivialError(StarshiftError):
    """A group word does not fix the first two tree levels pointwise."""


class ClosureError(StarshiftError):
    """A vertex set is not closed under the generator action."""


class DisjointnessError(StarshiftError):
    """Two subshifts expected to be disjoint share a configuration."""

    def __init__(self, message: str, witness: str):
        super().__init__(message)
        self.witness = witness


class EmptySftError(StarshiftError):
    """A tile set admits no valid configuration."""


class ReconstructionError(StarshiftError):
    """A stabilizer oracle returned answers inconsistent with any point."""


class InternalError(StarshiftError):
    """An invariant that should hold on valid input was violated."""
