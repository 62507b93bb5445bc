"""Exception hierarchy shared by all modules."""


class TopologyError(ValueError):
    """Base class for invalid inputs to any of the invariant computations."""


class DegenerateError(TopologyError):
    """A Montesinos link or Seifert space falls outside the classified range.

    Raised for integer or infinite tangles and for configurations with too few
    exceptional fibers (lens-space degenerations).
    """


class NotATypeError(TopologyError):
    """A Seifert space without exactly three exceptional fibers has no S^2(a,b,c) type."""


class NotationError(TopologyError):
    """Text notation could not be parsed."""


class SearchFailure(RuntimeError):
    """An exhaustive search found no solution inside its bounds."""


class ClaimError(ValueError):
    """Unknown claim id or malformed claim parameters."""
