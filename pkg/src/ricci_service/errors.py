"""Exceptions raised by the curvature toolkit.

Everything derives from RicciError. CertificateError is reserved for a failed
mathematical cross-check; all other subclasses describe bad input or a violated
precondition.
"""


class RicciError(Exception):
    def __init__(self, message):
        super().__init__(message)
        self.message = message


class InvalidGraph(RicciError):
    pass


class GraphParseError(InvalidGraph):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnsupportedParameter(RicciError):
    pass


class NotAnEdge(RicciError):
    def __init__(self, u, v):
        super().__init__(f"({u}, {v}) is not an edge of the graph")
        self.edge = (u, v)


class PreconditionViolated(RicciError):
    pass


class DegreeZero(RicciError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} has degree zero")
        self.vertex = vertex


class Unreachable(RicciError):
    pass


class NotLipschitz(RicciError):
    def __init__(self, u, v, difference, distance):
        super().__init__(
            f"potential is not 1-Lipschitz at ({u}, {v}): |f(u) - f(v)| = {difference} > rho = {distance}"
        )
        self.witness = (u, v)


class InvalidPairing(RicciError):
    pass


class IrregularGraph(RicciError):
    pass


class InvalidMatchingSize(RicciError):
    pass


class UnsupportedGraph(RicciError):
    pass


class Disconnected(RicciError):
    pass


class NoConvergence(RicciError):
    pass


class CertificateError(RicciError):
    pass
