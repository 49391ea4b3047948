"""Exception hierarchy for harmonicph.

Every error raised by the library derives from HarmonicError so callers can
catch library failures with a single except clause.
"""


class HarmonicError(Exception):
    """Base class for all harmonicph errors."""


class MalformedSimplex(HarmonicError):
    """Vertex list is not a strictly increasing tuple of non-negative ints."""


class SimplexNotInAmbient(HarmonicError):
    """A simplex was referenced that the ambient complex does not contain."""


class InvalidSubcomplex(HarmonicError):
    """The claimed subcomplex is not contained in the ambient complex."""


class NotNested(HarmonicError):
    """Functorial map requested between complexes that are not nested."""


class DimensionMismatch(HarmonicError):
    """Operands live in ambient spaces of different dimension."""


class NotASubspace(HarmonicError):
    """A subspace containment precondition failed at the working tolerance."""


class NotAdmissible(HarmonicError):
    """Function values do not strictly increase from a face to a coface."""


class NonMonotone(HarmonicError):
    """Entry times decrease from a face to a coface."""


class IndexOutOfRange(HarmonicError):
    """Filtration index outside the valid range."""


class NotSimple(HarmonicError):
    """Operation requires a bar of multiplicity one."""


class InfiniteBar(HarmonicError):
    """Operation requires a finite bar."""


class ZeroChain(HarmonicError):
    """Operation requires a nonzero chain."""


class ComplexMismatch(HarmonicError):
    """Operands are defined over different simplicial complexes."""


class HypothesisViolated(HarmonicError):
    """A theorem hypothesis (all multiplicities at most one) fails."""


class ParseError(HarmonicError):
    """A filtration file could not be parsed."""

    def __init__(self, line_no: int, reason: str):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}")


class DuplicateSimplex(HarmonicError):
    """The same simplex appears twice in a filtration file."""


class InvalidLadder(HarmonicError):
    """Ladder parameters out of range."""
