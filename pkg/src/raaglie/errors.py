"""Exception hierarchy shared by all modules."""


class RaagError(Exception):
    """Base class for every error raised by this package."""


class GraphError(RaagError, ValueError):
    """Malformed or unsupported commutation graph."""


class WordSyntaxError(RaagError, ValueError):
    """Unparsable trace or group-word text."""


class ResourceLimitError(RaagError):
    """A configured size cap (vertices, traces, polynomial terms) was exceeded."""


class TruncationMismatch(RaagError, ValueError):
    """Binary operation on polynomials over different graphs or truncations."""


class NotAUnit(RaagError, ValueError):
    """Constant term is not +1 or -1."""


class NotLyndon(RaagError, ValueError):
    """Operation requires a Lyndon element."""


class NonHomogeneous(RaagError, ValueError):
    """Polynomial mixes several degrees where one was required."""


class NotInLieSubalgebra(RaagError):
    """Polynomial is not in the span of the Lyndon basis."""


class NotInFiltration(RaagError):
    """Group element does not lie in the requested filtration term."""
