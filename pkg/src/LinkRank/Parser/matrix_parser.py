"""
Adjacency-matrix CSV reader.

Rows are sources and columns are targets; every cell is 0 or 1.
"""

import io
import logging
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from Graph import DirectedGraph
from Utils.errors import InputError, NonBinaryEntry

logger = logging.getLogger(__name__)


def parse_adjacency_matrix_csv(text: str, labels: Optional[Sequence[str]] = None) -> DirectedGraph:
    """
    Parse a headerless 0/1 CSV matrix.

    Args:
        text: The CSV text
        labels: Optional node labels, defaulting to "0".."n-1"

    Raises:
        NonSquareMatrix: If the matrix is not n x n
        NonBinaryEntry: If a cell is not 0 or 1
        InputError: If rows have different lengths
    """
    if not text.strip():
        return DirectedGraph.from_adjacency_matrix(np.zeros((0, 0)), labels)

    try:
        frame = pd.read_csv(
            io.StringIO(text), header=None, dtype=str, skipinitialspace=True, skip_blank_lines=True
        )
    except pd.errors.ParserError as e:
        raise InputError(f"Adjacency matrix rows differ in length: {e}") from e

    cells = frame.apply(lambda column: column.str.strip())
    if cells.isna().to_numpy().any():
        row, col = (int(x) for x in np.argwhere(cells.isna().to_numpy())[0])
        raise InputError(f"Adjacency matrix row {row} is missing column {col}")

    numeric = cells.apply(pd.to_numeric, errors="coerce")
    unparsed = numeric.isna().to_numpy()
    if unparsed.any():
        row, col = (int(x) for x in np.argwhere(unparsed)[0])
        raise NonBinaryEntry(row, col, cells.iat[row, col])

    logger.debug(f"Read {frame.shape[0]}x{frame.shape[1]} adjacency matrix")
    return DirectedGraph.from_adjacency_matrix(numeric.to_numpy(), labels)
