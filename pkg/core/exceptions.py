# core/exceptions.py
"""
Exceptions shared by every toolkit app.

Each named failure of the computation layer is its own subclass so that the
management commands can map it onto an exit code without string matching.
"""


class ToolkitError(Exception):
    """Base class for all toolkit errors"""


class ParseError(ToolkitError):
    """Malformed facet file or generator spec"""


class EmptyInput(ToolkitError):
    """A complex was requested from an empty face list"""


class GhostVertex(ToolkitError):
    """Some vertex of [n] lies in no face"""

    def __init__(self, vertices):
        self.vertices = tuple(sorted(vertices))
        listed = ", ".join(str(v) for v in self.vertices)
        super().__init__(f"ghost vertices (in no face): {listed}")


class FullSimplex(ToolkitError):
    """The complex is the full simplex, so its Stanley-Reisner ideal is zero"""


class RidgeDegreesUndefined(ToolkitError):
    """Ridge degrees are only defined for pure complexes"""


class CapExceeded(ToolkitError):
    """An exhaustive enumeration would exceed the configured vertex cap"""

    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"n={n} exceeds the enumeration cap {cap} (use --force to override)")


class DegenerateS(ToolkitError):
    """The generator degree s must be at least 2"""


class DomainError(ToolkitError):
    """A real-valued bound was evaluated outside its domain"""


class HypothesisUnmet(ToolkitError):
    """The hypotheses of the statement being verified do not hold"""


class BadParameters(ToolkitError):
    """A generator was called outside its parameter range"""


class TooSmall(ToolkitError):
    """The graph has fewer than two vertices"""
