"""
Global constants shared by the parsers and writers.
"""


class RegularExpressions:
    """Collection of regular expressions used throughout the application."""

    WHITESPACE_SPLIT_REGEX: str = r"\s+"
    """Separates SRC and DST on an edge-list line."""

    DOT_ESCAPE_REGEX: str = r'(["\\])'
    """Characters that must be backslash-escaped inside a quoted DOT identifier."""


class InputFormats:
    """Input formats accepted by the CLI."""

    EDGES: str = "edges"
    """Whitespace-separated `SRC DST` lines, `#` comments."""
    MATRIX: str = "matrix"
    """CSV of 0/1 entries, row = source."""
    FBJSON: str = "fbjson"
    """JSON array of social-graph documents."""

    ALL = (EDGES, MATRIX, FBJSON)

    COMMENT_PREFIX: str = "#"
    """Edge-list lines starting with this are skipped."""
