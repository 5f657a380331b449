"""Exception taxonomy for the knots package.

Split by how a caller (notably the command line tool) should react:
parse problems mean the input text was bad, domain problems mean the
input was well formed but the requested operation does not apply to it,
and degeneracy problems mean a geometric routine hit a non-generic
configuration it refuses to resolve.
"""


class KnotsError(Exception):
    """Base class for all package-specific errors."""


class ParseError(KnotsError):
    """Input text could not be read as a signed oriented Gauss code."""


class ConsistencyError(ParseError):
    """Tokens parsed but the code is not a valid diagram.

    Examples: a crossing label seen once or three times, a label used
    twice in the same role, or the two passes of a crossing disagreeing
    about its sign.
    """


class DomainError(KnotsError):
    """A well-formed input is outside the domain of the operation."""


class NotAKnotError(DomainError):
    """A knot-only invariant was asked of a multi-component diagram."""


class UnknownCrossingError(DomainError):
    """An operation referenced a crossing id absent from the diagram."""


class UnknownNameError(DomainError):
    """A catalog lookup used a name the catalog does not contain."""


class NonPlanarError(DomainError):
    """An operation that needs a plane diagram got a genus > 0 code."""


class InvalidSiteError(DomainError):
    """A local move was applied at a site where its pattern is absent."""


class DegeneracyError(KnotsError):
    """Geometric input is degenerate (coplanar, collinear, coincident)."""


class GenericityFailure(DegeneracyError):
    """Projection retries exhausted without finding a generic direction."""
