"""
Utility functions for linkrank.

This module provides logging setup and the shared exception hierarchy.
"""

from .errors import (
    DidNotConverge,
    DuplicateId,
    EmptyGraph,
    FactorsExceedNodes,
    IndexOutOfRange,
    InputError,
    InvalidParams,
    LinkRankError,
    MalformedDocument,
    MalformedLine,
    NeverCited,
    NonBinaryEntry,
    NonSquareMatrix,
)
from .logging import setup_logging

__all__ = [
    "setup_logging",
    "LinkRankError",
    "InputError",
    "MalformedLine",
    "MalformedDocument",
    "DuplicateId",
    "NonSquareMatrix",
    "NonBinaryEntry",
    "InvalidParams",
    "IndexOutOfRange",
    "EmptyGraph",
    "FactorsExceedNodes",
    "NeverCited",
    "DidNotConverge",
]
