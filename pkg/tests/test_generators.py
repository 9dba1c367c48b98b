"""
Unit tests for the synthetic graph generators.
"""

import unittest

import numpy as np

from LinkRank import generate, parse_params
from Utils.errors import InvalidParams


class TestGenerate(unittest.TestCase):
    """Test cases for each graph model."""

    def test_cycle(self):
        g = generate("cycle", {"n": 4})
        self.assertEqual(g.labels, ("0", "1", "2", "3"))
        self.assertEqual(list(g.edges()), [(0, 1), (1, 2), (2, 3), (3, 0)])

    def test_single_node_cycle_has_no_edge(self):
        g = generate("cycle", {"n": 1})
        self.assertEqual((g.n, g.m), (1, 0))

    def test_star(self):
        g = generate("star", {"k": 3})
        self.assertEqual((g.n, g.m), (4, 3))
        self.assertEqual(g.in_degree(g.index_of("0")), 3)
        self.assertEqual(g.out_degree(g.index_of("0")), 0)

    def test_bipartite(self):
        g = generate("bipartite", {"h": 2, "a": 2})
        self.assertEqual((g.n, g.m), (4, 4))
        self.assertTrue(g.has_edge(g.index_of("h1"), g.index_of("a0")))

    def test_tkc(self):
        g = generate("tkc", {"dense_h": 4, "dense_a": 4, "sparse_hubs": 6})
        self.assertEqual((g.n, g.m), (15, 22))
        self.assertEqual(g.in_degree(g.index_of("s")), 6)
        self.assertEqual(g.in_degree(g.index_of("a0")), 4)

    def test_planted_layout(self):
        """Test node order and degrees of pages, decoys and members."""
        g = generate("planted", {"pages": 3, "members_per_page": 5, "decoys": 2})
        self.assertEqual(g.labels[:5], ("page0", "page1", "page2", "decoy0", "decoy1"))
        self.assertEqual(g.n, 3 + 2 + 15 + 10)
        for p in range(3):
            self.assertEqual(g.out_degree(p), 0)
        self.assertEqual([g.in_degree(p) for p in range(3)], [6, 6, 5])
        for decoy in (3, 4):
            self.assertEqual(g.out_degree(decoy), 1)
            self.assertEqual(g.in_degree(decoy), 5)
        self.assertTrue(g.has_edge(g.index_of("decoy1"), g.index_of("page1")))

    def test_planted_overlap(self):
        g = generate("planted", {"pages": 3, "members_per_page": 4, "overlap": 2})
        first = set(g.in_neighbors(0))
        second = set(g.in_neighbors(1))
        self.assertEqual(len(first & second), 2)
        self.assertEqual(g.n, 3 + 2 * 2 + 4)

    def test_random_is_seeded(self):
        first = generate("random", {"n": 30, "p": 0.2}, seed=5)
        second = generate("random", {"n": 30, "p": 0.2}, seed=5)
        self.assertEqual(first, second)
        np.testing.assert_array_equal(first.to_matrix().diagonal(), 0)

    def test_random_extremes(self):
        self.assertEqual(generate("random", {"n": 5, "p": 0.0}, seed=1).m, 0)
        self.assertEqual(generate("random", {"n": 5, "p": 1.0}, seed=1).m, 20)

    def test_string_params_are_coerced(self):
        g = generate("bipartite", parse_params("h=3,a=2"))
        self.assertEqual(g.m, 6)

    def test_invalid_params(self):
        cases = [
            ("cycle", {"n": 0}),
            ("star", {"k": 2, "extra": 1}),
            ("random", {"n": 3, "p": 1.5}),
            ("planted", {"pages": 2, "members_per_page": 3, "overlap": 3}),
            ("tkc", {"dense_h": 2}),
            ("nosuchmodel", {}),
        ]
        for model, params in cases:
            with self.subTest(model=model, params=params):
                with self.assertRaises(InvalidParams):
                    generate(model, params)


class TestParseParams(unittest.TestCase):
    """Test cases for key=value parameter strings."""

    def test_pairs(self):
        self.assertEqual(parse_params("n=10, p=0.5"), {"n": "10", "p": "0.5"})

    def test_empty(self):
        self.assertEqual(parse_params(""), {})

    def test_missing_equals(self):
        with self.assertRaises(InvalidParams):
            parse_params("n=10,p")


if __name__ == "__main__":
    unittest.main()
