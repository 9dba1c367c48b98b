"""
Unit tests for the DirectedGraph container.
"""

import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from Graph import (
    DirectedGraph,
    from_adjacency_matrix,
    from_edge_list,
    in_degree,
    in_neighbors,
    out_degree,
    out_neighbors,
)
from Utils.errors import IndexOutOfRange, InputError, NonBinaryEntry, NonSquareMatrix

FOUR_NODE_MATRIX = [
    [0, 0, 1, 0],
    [1, 0, 0, 1],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
]


class TestFromEdgeList(unittest.TestCase):
    """Test cases for building graphs from label pairs."""

    def test_cycle(self):
        """Test that a three-edge cycle keeps every node and edge."""
        g = from_edge_list([("a", "b"), ("b", "c"), ("c", "a")])
        self.assertEqual(g.n, 3)
        self.assertEqual(g.m, 3)
        self.assertEqual(g.labels, ("a", "b", "c"))
        self.assertEqual(list(g.edges()), [(0, 1), (1, 2), (2, 0)])

    def test_self_loop_dropped(self):
        """Test that a self-loop keeps its node but not its edge."""
        g = from_edge_list([("a", "a")])
        self.assertEqual((g.n, g.m), (1, 0))
        self.assertEqual(g.build_info.self_loops_dropped, 1)

    def test_duplicate_dropped(self):
        """Test that repeated pairs produce one edge."""
        g = from_edge_list([("a", "b"), ("a", "b")])
        self.assertEqual((g.n, g.m), (2, 1))
        self.assertEqual(g.build_info.duplicates_dropped, 1)

    def test_empty(self):
        g = from_edge_list([])
        self.assertEqual((g.n, g.m), (0, 0))

    def test_declared_nodes_come_first(self):
        """Test that pre-declared labels are indexed first and isolated ones survive."""
        g = DirectedGraph.from_edge_list([("x", "y")], nodes=["y", "lonely"])
        self.assertEqual(g.labels, ("y", "lonely", "x"))
        self.assertEqual(list(g.edges()), [(2, 0)])

    def test_empty_label_rejected(self):
        with self.assertRaises(InputError):
            from_edge_list([("", "b")])


class TestFromAdjacencyMatrix(unittest.TestCase):
    """Test cases for building graphs from 0/1 matrices."""

    def test_single_edge(self):
        g = from_adjacency_matrix([[0, 1], [0, 0]])
        self.assertEqual(list(g.edges()), [(0, 1)])
        self.assertEqual(g.labels, ("0", "1"))

    def test_identity_has_no_edges(self):
        """Test that diagonal entries are ignored."""
        g = from_adjacency_matrix(np.eye(3, dtype=int))
        self.assertEqual((g.n, g.m), (3, 0))
        self.assertEqual(g.build_info.self_loops_dropped, 3)

    def test_four_node_matrix(self):
        """Test that rows are sources in the 4x4 link matrix."""
        g = from_adjacency_matrix(FOUR_NODE_MATRIX)
        self.assertEqual(set(g.edges()), {(0, 2), (1, 0), (1, 3), (2, 1), (3, 2)})
        self.assertEqual(in_neighbors(g, 2), (0, 3))

    def test_non_square(self):
        with self.assertRaises(NonSquareMatrix) as ctx:
            from_adjacency_matrix([[0, 1, 0], [1, 0, 0]])
        self.assertEqual(ctx.exception.shape, (2, 3))

    def test_non_binary(self):
        """Test that the first entry outside {0, 1} is reported with its position."""
        with self.assertRaises(NonBinaryEntry) as ctx:
            from_adjacency_matrix([[0, 2], [0, 0]])
        self.assertEqual((ctx.exception.row, ctx.exception.col), (0, 1))

    def test_label_count_must_match(self):
        with self.assertRaises(InputError):
            from_adjacency_matrix([[0, 1], [0, 0]], labels=["only"])


class TestAccessors(unittest.TestCase):
    """Test cases for neighbour and degree queries."""

    def setUp(self):
        self.star = from_edge_list([("1", "0"), ("2", "0"), ("3", "0")])
        self.cycle = from_adjacency_matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])

    def test_star_degrees(self):
        sink = self.star.index_of("0")
        self.assertEqual(in_degree(self.star, sink), 3)
        self.assertEqual(out_degree(self.star, sink), 0)

    def test_cycle_neighbors(self):
        self.assertEqual(in_neighbors(self.cycle, 1), (0,))
        self.assertEqual(out_neighbors(self.cycle, 1), (2,))

    def test_has_edge(self):
        self.assertTrue(self.cycle.has_edge(2, 0))
        self.assertFalse(self.cycle.has_edge(0, 2))

    def test_out_of_range(self):
        """Test that every accessor rejects indices outside [0, n)."""
        for accessor in (in_neighbors, out_neighbors, in_degree, out_degree):
            with self.subTest(accessor=accessor.__name__):
                with self.assertRaises(IndexOutOfRange):
                    accessor(self.cycle, 3)
                with self.assertRaises(IndexOutOfRange):
                    accessor(self.cycle, -1)

    def test_index_of_unknown_label(self):
        with self.assertRaises(KeyError):
            self.star.index_of("missing")

    def test_adjacency_rows_are_sources(self):
        dense = self.cycle.adjacency().toarray()
        np.testing.assert_array_equal(dense, self.cycle.to_matrix())
        self.assertEqual(dense[0, 1], 1.0)


@st.composite
def simple_matrices(draw, max_n=30):
    n = draw(st.integers(min_value=1, max_value=max_n))
    matrix = draw(arrays(np.int8, (n, n), elements=st.integers(0, 1)))
    np.fill_diagonal(matrix, 0)
    return matrix


class TestGraphProperties(unittest.TestCase):
    """Property tests over random simple digraphs."""

    @settings(max_examples=60, deadline=None)
    @given(simple_matrices())
    def test_matrix_round_trip(self, matrix):
        """Test that to_matrix and from_adjacency_matrix are inverse."""
        g = from_adjacency_matrix(matrix)
        np.testing.assert_array_equal(g.to_matrix(), matrix)
        self.assertEqual(from_adjacency_matrix(g.to_matrix()), g)

    @settings(max_examples=60, deadline=None)
    @given(simple_matrices())
    def test_degree_sums_and_mirror(self, matrix):
        """Test that in and out adjacency mirror each other and degrees sum to m."""
        g = from_adjacency_matrix(matrix)
        self.assertEqual(int(g.in_degrees().sum()), g.m)
        self.assertEqual(int(g.out_degrees().sum()), g.m)
        for i in range(g.n):
            for j in g.out_neighbors(i):
                self.assertIn(i, g.in_neighbors(j))
            self.assertEqual(list(g.out_neighbors(i)), sorted(g.out_neighbors(i)))


if __name__ == "__main__":
    unittest.main()
