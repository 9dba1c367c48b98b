"""
Exception hierarchy for linkrank.

Every error raised on purpose by the toolkit derives from LinkRankError. Input
problems additionally derive from ValueError so callers that only know the
standard library can still catch them.
"""

from typing import Any, Optional, Tuple


class LinkRankError(Exception):
    """Base class for all linkrank errors."""


class InputError(LinkRankError, ValueError):
    """Raised when an input file, matrix or parameter set cannot be used."""


class MalformedLine(InputError):
    """An edge-list line that is not exactly `SRC DST`."""

    def __init__(self, line_number: int, line: str = "") -> None:
        self.line_number = line_number
        self.line = line
        super().__init__(f"Malformed edge-list line {line_number}: {line!r}")


class MalformedDocument(InputError):
    """A social-graph document that fails validation."""

    def __init__(self, index: int, reason: str = "") -> None:
        self.index = index
        self.reason = reason
        super().__init__(f"Malformed document at index {index}: {reason}")


class DuplicateId(InputError):
    """Two social-graph documents share an id."""

    def __init__(self, document_id: str) -> None:
        self.document_id = document_id
        super().__init__(f"Duplicate document id: {document_id!r}")


class NonSquareMatrix(InputError):
    """An adjacency matrix whose shape is not n x n."""

    def __init__(self, shape: Tuple[int, ...]) -> None:
        self.shape = shape
        super().__init__(f"Adjacency matrix must be square, got shape {shape}")


class NonBinaryEntry(InputError):
    """An adjacency matrix entry outside {0, 1}."""

    def __init__(self, row: int, col: int, value: Any) -> None:
        self.row = row
        self.col = col
        self.value = value
        super().__init__(f"Adjacency matrix entry ({row}, {col}) is {value!r}, expected 0 or 1")


class InvalidParams(InputError):
    """Generator or detection parameters out of range."""


class IndexOutOfRange(LinkRankError, IndexError):
    """A node index outside [0, n)."""

    def __init__(self, index: int, n: int) -> None:
        self.index = index
        self.n = n
        super().__init__(f"Node index {index} out of range for graph with {n} nodes")


class EmptyGraph(LinkRankError, ValueError):
    """The algorithm needs at least one edge."""


class FactorsExceedNodes(LinkRankError, ValueError):
    """More PHITS factors requested than the graph has nodes."""


class NeverCited(LinkRankError, ValueError):
    """Membership asked for a document nobody links to."""

    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(f"Node {index} is never cited; P(z|c) is undefined")


class DidNotConverge(LinkRankError, RuntimeError):
    """An iterative method hit its sweep cap. Carries the last result."""

    def __init__(self, algorithm: str, iterations: int, result: Optional[Any] = None) -> None:
        self.algorithm = algorithm
        self.iterations = iterations
        self.result = result
        super().__init__(f"{algorithm} did not converge after {iterations} iterations")
