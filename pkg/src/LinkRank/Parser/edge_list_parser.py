"""
Edge-list reader and writer.

One edge per line, `SRC<whitespace>DST`. Blank lines and lines starting with
`#` are skipped.
"""

import logging
import re
from typing import List, Tuple

from Configuration import InputFormats, RegularExpressions
from Graph import DirectedGraph
from Utils.errors import InputError, MalformedLine

logger = logging.getLogger(__name__)

_SPLIT = re.compile(RegularExpressions.WHITESPACE_SPLIT_REGEX)


def parse_edge_list(text: str) -> DirectedGraph:
    """
    Parse edge-list text into a graph.

    Raises:
        MalformedLine: On the first line that is not exactly two tokens. Nothing
            is built in that case.
    """
    edges: List[Tuple[str, str]] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(InputFormats.COMMENT_PREFIX):
            continue
        tokens = _SPLIT.split(stripped)
        if len(tokens) != 2:
            raise MalformedLine(line_number, line)
        edges.append((tokens[0], tokens[1]))

    logger.debug(f"Read {len(edges)} edge lines")
    return DirectedGraph.from_edge_list(edges)


def format_edge_list(g: DirectedGraph) -> str:
    """
    Write g as edge-list text, edges in ascending (source, target) index order.

    Nodes without any edge have no line and are not written.

    Raises:
        InputError: If a label contains whitespace or starts with `#`
    """
    for label in g.labels:
        if _SPLIT.search(label) or label.startswith(InputFormats.COMMENT_PREFIX):
            raise InputError(f"Label {label!r} cannot be written to an edge list")

    isolated = sum(1 for i in range(g.n) if g.in_degree(i) == 0 and g.out_degree(i) == 0)
    if isolated:
        logger.warning(f"{isolated} isolated nodes are not representable in an edge list")

    labels = g.labels
    return "".join(f"{labels[i]} {labels[j]}\n" for i, j in g.edges())
