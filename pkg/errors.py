"""
Exception hierarchy. The CLI maps every RegtoolError to exit code 2.
"""
from __future__ import annotations

from typing import Any


class RegtoolError(Exception):
    """Base class for all library errors."""


class ParseError(RegtoolError, ValueError):
    """Malformed edge-list or facet-list document."""


class VertexLimitError(RegtoolError, ValueError):
    """Vertex universe larger than the compact subset representation allows."""


class EdgeNotFoundError(RegtoolError, ValueError):
    pass


class TooFewEdgesError(RegtoolError, ValueError):
    pass


class IdenticalEdgesError(RegtoolError, ValueError):
    pass


class VoidComplexError(RegtoolError, ValueError):
    """Operation undefined on the void complex (no faces at all)."""


class NotAFaceError(RegtoolError, ValueError):
    pass


class DimensionError(RegtoolError, ValueError):
    pass


class NotAGraphError(RegtoolError, ValueError):
    pass


class FieldError(RegtoolError, ValueError):
    """Coefficient characteristic is not an admissible prime."""


class FamilyError(RegtoolError, ValueError):
    """Unknown family or invalid family parameters."""


class PartitionError(RegtoolError, ValueError):
    pass


class UnknownCheckError(RegtoolError, ValueError):
    pass


class InvariantError(RegtoolError, AssertionError):
    """A structural invariant asserted at runtime did not hold."""


class CertificateError(RegtoolError, AssertionError):
    """A regularity certificate failed re-verification."""


class NotVertexDecomposableError(RegtoolError):
    def __init__(self, message: str, certificate: Any = None) -> None:
        super().__init__(message)
        self.certificate = certificate


class InvalidSheddingOrderError(RegtoolError, ValueError):
    def __init__(self, message: str, vertex: int | None = None, remaining: Any = None) -> None:
        super().__init__(message)
        self.vertex = vertex
        self.remaining = remaining
