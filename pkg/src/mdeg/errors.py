"""Exception hierarchy shared by all modules."""


class MdegError(Exception):
    """Base class for all library errors."""


class ZeroVector(MdegError):
    """An all-zero vector where a nonzero one is required."""


class NonPrimitiveVector(MdegError):
    """A vector whose coordinate gcd is not 1."""


class DimensionMismatch(MdegError):
    """Operands live in different ambient dimensions."""


class LengthMismatch(MdegError):
    """A tuple has the wrong number of members for the operation."""


class LowerDimensional(MdegError):
    """A full-dimensional polytope is required."""


class EmptyTuple(MdegError):
    """A nonempty tuple of polytopes is required."""


class ParallelDirections(MdegError):
    """Prism directions must be linearly independent."""


class TooFewPolytopes(MdegError):
    """Mixed degree is undefined for tuples this short."""


class PreconditionViolation(MdegError):
    """An operation-specific precondition failed."""


class InternalInvariantViolation(MdegError):
    """A theorem-backed internal invariant failed; indicates a bug."""


class SeedInvalid(MdegError):
    """Bundled seed data failed its load-time validation."""


class DependencyMissing(MdegError):
    """A pipeline prerequisite manifest has not been computed."""


class CounterexampleFound(MdegError):
    """A verification pipeline found a counterexample to a pinned claim."""


class CoverageGap(MdegError):
    """A classified tuple is not covered by any maximal tuple."""


class ParseError(MdegError):
    """Malformed input file."""


class IoError(MdegError):
    """Cache or output file I/O failed."""
