"""
Immutable simple directed graph.

Nodes are dense integer indices in first-appearance order, each carrying an
opaque string label. Forward and reverse adjacency lists are kept sorted so
iteration order is deterministic and membership tests can bisect.
"""

import logging
from bisect import bisect_left
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np
from numpy.typing import ArrayLike
from scipy import sparse

from Utils.errors import IndexOutOfRange, InputError, NonBinaryEntry, NonSquareMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BuildInfo:
    """What the builder dropped to keep the graph simple."""
    self_loops_dropped: int = 0
    duplicates_dropped: int = 0


class DirectedGraph:
    """
    A simple directed graph: no self-loops, no parallel edges.

    Build instances with `from_edge_list` or `from_adjacency_matrix`; the
    constructor trusts its arguments.
    """

    __slots__ = ("_labels", "_index", "_out_adj", "_in_adj", "_m", "_build_info", "_csr")

    def __init__(
        self,
        labels: Sequence[str],
        out_adj: Sequence[Sequence[int]],
        build_info: Optional[BuildInfo] = None,
    ) -> None:
        n = len(labels)
        self._labels: Tuple[str, ...] = tuple(labels)
        self._index: Dict[str, int] = {label: i for i, label in enumerate(self._labels)}
        self._out_adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(succ)) for succ in out_adj)

        in_lists: List[List[int]] = [[] for _ in range(n)]
        for i, succ in enumerate(self._out_adj):
            for j in succ:
                in_lists[j].append(i)
        # sources are visited in ascending order, so each list is already sorted
        self._in_adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(pred) for pred in in_lists)

        self._m = sum(len(succ) for succ in self._out_adj)
        self._build_info = build_info or BuildInfo()
        self._csr: Optional[sparse.csr_matrix] = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_edge_list(
        cls,
        edges: Iterable[Tuple[str, str]],
        nodes: Optional[Iterable[str]] = None,
    ) -> "DirectedGraph":
        """
        Build a graph from (source, target) label pairs.

        Args:
            edges: Label pairs. Self-loops and repeated pairs are dropped.
            nodes: Optional labels indexed first, in order, before any edge is read.

        Returns:
            A new DirectedGraph
        """
        index: Dict[str, int] = {}
        labels: List[str] = []
        out_sets: List[Set[int]] = []

        def intern(label: str) -> int:
            if not isinstance(label, str) or not label:
                raise InputError(f"Node labels must be non-empty strings, got {label!r}")
            idx = index.get(label)
            if idx is None:
                idx = len(labels)
                index[label] = idx
                labels.append(label)
                out_sets.append(set())
            return idx

        for label in nodes or ():
            intern(label)

        self_loops = 0
        duplicates = 0
        for src, dst in edges:
            i = intern(src)
            j = intern(dst)
            if i == j:
                self_loops += 1
                continue
            if j in out_sets[i]:
                duplicates += 1
                continue
            out_sets[i].add(j)

        if self_loops or duplicates:
            logger.info(
                f"Dropped {self_loops} self-loops and {duplicates} duplicate edges while building graph"
            )
        info = BuildInfo(self_loops_dropped=self_loops, duplicates_dropped=duplicates)
        return cls(labels, out_sets, info)

    @classmethod
    def from_adjacency_matrix(
        cls,
        w: ArrayLike,
        labels: Optional[Sequence[str]] = None,
    ) -> "DirectedGraph":
        """
        Build a graph from a square 0/1 matrix, row = source.

        Args:
            w: The adjacency matrix; w[i][j] == 1 means an edge i -> j.
            labels: Optional node labels, defaulting to "0".."n-1".

        Returns:
            A new DirectedGraph. Diagonal entries are ignored.

        Raises:
            NonSquareMatrix: If w is not n x n
            NonBinaryEntry: If an entry is not 0 or 1
        """
        arr = np.asarray(w)
        if arr.size == 0 and arr.ndim <= 2 and (arr.ndim < 2 or arr.shape[0] == arr.shape[1]):
            arr = arr.reshape(0, 0)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise NonSquareMatrix(tuple(arr.shape))

        n = arr.shape[0]
        bad = ~np.isin(arr, (0, 1))
        if bad.any():
            row, col = (int(x) for x in np.argwhere(bad)[0])
            raise NonBinaryEntry(row, col, arr[row, col].item())

        if labels is None:
            labels = [str(i) for i in range(n)]
        elif len(labels) != n:
            raise InputError(f"Expected {n} labels, got {len(labels)}")

        self_loops = int(np.count_nonzero(np.diagonal(arr)))
        out_adj = [
            [int(j) for j in np.flatnonzero(arr[i]) if j != i]
            for i in range(n)
        ]
        if self_loops:
            logger.info(f"Ignored {self_loops} diagonal entries in adjacency matrix")
        return cls(labels, out_adj, BuildInfo(self_loops_dropped=self_loops))

    # -- size and labels ----------------------------------------------------

    @property
    def n(self) -> int:
        """Node count."""
        return len(self._labels)

    @property
    def m(self) -> int:
        """Edge count."""
        return self._m

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def build_info(self) -> BuildInfo:
        return self._build_info

    def label_of(self, i: int) -> str:
        self._check(i)
        return self._labels[i]

    def index_of(self, label: str) -> int:
        """Index of a label. Raises KeyError for unknown labels."""
        return self._index[label]

    # -- adjacency ----------------------------------------------------------

    def out_neighbors(self, i: int) -> Tuple[int, ...]:
        """F(i): the sorted successors of i."""
        self._check(i)
        return self._out_adj[i]

    def in_neighbors(self, i: int) -> Tuple[int, ...]:
        """B(i): the sorted predecessors of i."""
        self._check(i)
        return self._in_adj[i]

    def out_degree(self, i: int) -> int:
        self._check(i)
        return len(self._out_adj[i])

    def in_degree(self, i: int) -> int:
        self._check(i)
        return len(self._in_adj[i])

    def has_edge(self, i: int, j: int) -> bool:
        self._check(i)
        self._check(j)
        succ = self._out_adj[i]
        k = bisect_left(succ, j)
        return k < len(succ) and succ[k] == j

    def out_degrees(self) -> np.ndarray:
        return np.fromiter((len(s) for s in self._out_adj), dtype=np.int64, count=self.n)

    def in_degrees(self) -> np.ndarray:
        return np.fromiter((len(p) for p in self._in_adj), dtype=np.int64, count=self.n)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """All edges (i, j) in ascending (i, j) order."""
        for i, succ in enumerate(self._out_adj):
            for j in succ:
                yield i, j

    def adjacency(self) -> sparse.csr_matrix:
        """The adjacency matrix W as a float CSR matrix (row = source)."""
        if self._csr is None:
            rows = np.fromiter((i for i, _ in self.edges()), dtype=np.int64, count=self._m)
            cols = np.fromiter((j for _, j in self.edges()), dtype=np.int64, count=self._m)
            data = np.ones(self._m, dtype=np.float64)
            self._csr = sparse.csr_matrix((data, (rows, cols)), shape=(self.n, self.n))
        return self._csr

    def to_matrix(self) -> np.ndarray:
        """The adjacency matrix W as a dense 0/1 int array (row = source)."""
        w = np.zeros((self.n, self.n), dtype=np.int8)
        for i, j in self.edges():
            w[i, j] = 1
        return w

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self._labels == other._labels and self._out_adj == other._out_adj

    def __hash__(self) -> int:
        return hash((self._labels, self._out_adj))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, m={self.m})"

    def _check(self, i: int) -> None:
        if not 0 <= i < len(self._labels):
            raise IndexOutOfRange(i, len(self._labels))


# Functional aliases matching the operation names used throughout the toolkit.

def from_edge_list(
    edges: Iterable[Tuple[str, str]], nodes: Optional[Iterable[str]] = None
) -> DirectedGraph:
    return DirectedGraph.from_edge_list(edges, nodes=nodes)


def from_adjacency_matrix(
    w: ArrayLike, labels: Optional[Sequence[str]] = None
) -> DirectedGraph:
    return DirectedGraph.from_adjacency_matrix(w, labels=labels)


def in_neighbors(g: DirectedGraph, i: int) -> Tuple[int, ...]:
    return g.in_neighbors(i)


def out_neighbors(g: DirectedGraph, i: int) -> Tuple[int, ...]:
    return g.out_neighbors(i)


def in_degree(g: DirectedGraph, i: int) -> int:
    return g.in_degree(i)


def out_degree(g: DirectedGraph, i: int) -> int:
    return g.out_degree(i)
