"""Exception hierarchy.

Every domain failure derives from :class:`LatticeError`, itself a
``ValueError``, so callers that only care about "bad input" can catch one
type. :class:`CoordinateOverflow` is kept separate in the CLI exit codes.
"""


class LatticeError(ValueError):
    """Base class for all domain errors raised by this package."""


class CoordinateOverflow(LatticeError, OverflowError):
    """A coordinate or intermediate value left the supported exact range."""


class BothZero(LatticeError):
    pass


class ZeroVector(LatticeError):
    pass


class NotSimple(LatticeError):
    pass


class Collinear(LatticeError):
    pass


class PolygonError(LatticeError):
    pass


class TooFewVertices(PolygonError):
    pass


class RepeatedVertex(PolygonError):
    pass


class DegenerateEdge(PolygonError):
    pass


class SelfIntersection(PolygonError):
    """Two boundary edges meet somewhere other than a shared vertex.

    ``edges`` holds the offending pair of edge indices (into the vertex list
    as given, edge ``i`` running from vertex ``i`` to vertex ``i + 1``).
    """

    def __init__(self, message, edges=None):
        super().__init__(message)
        self.edges = edges


class ChordError(PolygonError):
    pass


class ChordNotInside(ChordError):
    pass


class ChordEndpointsNotOnBoundary(ChordError):
    pass


class ChordSelfIntersects(ChordError):
    pass


class InconsistentTriangulation(LatticeError):
    pass


class Disconnected(LatticeError):
    pass


class NotOrdered(LatticeError):
    pass


class NotNeighbors(LatticeError):
    pass


class TooLarge(LatticeError):
    pass


class ParseError(ValueError):
    """A polygon file is not a well-formed list of integer vertex pairs.

    Deliberately not a :class:`LatticeError`: the CLI maps it to its own
    exit status.
    """
