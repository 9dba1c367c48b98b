"""
Unit tests for PHITS estimation and scoring.
"""

import unittest
from collections import defaultdict

import numpy as np

import oracles
from Configuration import PhitsConfig
from Graph import from_adjacency_matrix, from_edge_list
from Phits import (
    log_likelihood,
    phits_authority_aggregate,
    phits_authority_scores,
    phits_characteristic,
    phits_fit,
    phits_hub_scores,
    phits_membership,
)
from Utils.errors import EmptyGraph, FactorsExceedNodes, IndexOutOfRange, NeverCited


def _star():
    return from_edge_list([("1", "0"), ("2", "0"), ("3", "0")], nodes=["0"])


def _k22():
    return from_edge_list(
        [("0", "2"), ("0", "3"), ("1", "2"), ("1", "3")], nodes=["0", "1", "2", "3"]
    )


def _two_blocks():
    """Two disjoint K_{2,2}: hubs 0,1 cite 2,3 and hubs 4,5 cite 6,7."""
    edges = [(h, a) for h in ("0", "1") for a in ("2", "3")]
    edges += [(h, a) for h in ("4", "5") for a in ("6", "7")]
    return from_edge_list(edges, nodes=[str(i) for i in range(8)])


TWO_BLOCKS_FIT = PhitsConfig(factors=2, restarts=8, seed=3, ll_tol=1e-12, max_em_iters=5000)
BLOCKS = ((2, 3), (6, 7))


def _block_of_factor(model, z):
    mass = [model.p_c_given_z[list(block), z].sum() for block in BLOCKS]
    return int(np.argmax(mass)), max(mass)


def _relabeled(g, rng):
    """The same graph with its nodes numbered in a random order."""
    order = rng.permutation(g.n)
    edges = [(g.labels[i], g.labels[j]) for i, j in g.edges()]
    return from_edge_list(edges, nodes=[g.labels[k] for k in order])


class TestPhitsFit(unittest.TestCase):
    """Test cases for the EM estimator."""

    def test_single_edge_single_factor(self):
        model = phits_fit(from_edge_list([("0", "1")]), PhitsConfig(factors=1))
        self.assertAlmostEqual(model.log_likelihood, 0.0, places=9)
        np.testing.assert_allclose(model.p_c_given_z[:, 0], [0, 1], atol=1e-12)

    def test_log_likelihood_never_decreases(self):
        """Test EM monotonicity for every restart on random graphs."""
        graphs = [_star(), _k22(), _two_blocks()]
        for seed in range(20):
            g = from_adjacency_matrix(oracles.random_matrix(seed, 12, 0.25))
            if g.m:
                graphs.append(g)
        for index, g in enumerate(graphs):
            traces = defaultdict(list)
            cfg = PhitsConfig(factors=min(3, g.n), restarts=3, seed=index)
            phits_fit(g, cfg, callback=lambda r, _it, ll: traces[r].append(ll))
            with self.subTest(graph=index):
                self.assertEqual(len(traces), 3)
                for trace in traces.values():
                    steps = np.diff(trace)
                    self.assertTrue((steps >= -1e-10).all(), msg=f"decrease {steps.min()}")

    def test_disjoint_blocks_separate(self):
        """Test that two factors on two disjoint bicliques each land on one block."""
        model = phits_fit(_two_blocks(), TWO_BLOCKS_FIT)
        placed = [_block_of_factor(model, z) for z in range(2)]
        for block, mass in placed:
            self.assertGreaterEqual(mass, 0.95)
        self.assertEqual({block for block, _ in placed}, {0, 1})

    def test_relabeling_permutes_the_fit(self):
        """Test that renumbering nodes moves every parameter with its node label."""
        rng = np.random.default_rng(17)
        compared = 0
        for seed in range(10):
            g = from_adjacency_matrix(oracles.random_matrix(300 + seed, 15, 0.2))
            if g.m == 0:
                continue
            shuffled = _relabeled(g, rng)
            where = [shuffled.index_of(label) for label in g.labels]
            with self.subTest(seed=seed):
                single = PhitsConfig(factors=3, restarts=1, seed=1)
                model, moved = phits_fit(g, single), phits_fit(shuffled, single)
                self.assertAlmostEqual(model.log_likelihood, moved.log_likelihood, delta=1e-8)
                np.testing.assert_allclose(model.p_c_given_z, moved.p_c_given_z[where], atol=1e-8)
                np.testing.assert_allclose(model.p_z_given_d, moved.p_z_given_d[where], atol=1e-8)
                np.testing.assert_allclose(model.p_d, moved.p_d[where], atol=1e-15)

                several = PhitsConfig(factors=3, restarts=8, seed=1)
                self.assertAlmostEqual(
                    phits_fit(g, several).log_likelihood,
                    phits_fit(shuffled, several).log_likelihood,
                    delta=1e-7,
                )
            compared += 1
        self.assertGreaterEqual(compared, 8)

    def test_post_hoc_log_likelihood_matches(self):
        g = from_adjacency_matrix(oracles.random_matrix(7, 15, 0.2))
        model = phits_fit(g, PhitsConfig(factors=2, restarts=2))
        self.assertAlmostEqual(log_likelihood(model, g), model.log_likelihood, delta=1e-9)
        self.assertAlmostEqual(model.trace[-1], model.log_likelihood, delta=1e-12)

    def test_seed_determinism(self):
        """Test that one seed gives identical parameters and another seed may differ."""
        g = from_adjacency_matrix(oracles.random_matrix(11, 15, 0.2))
        cfg = PhitsConfig(factors=3, restarts=4, seed=42)
        first, second = phits_fit(g, cfg), phits_fit(g, cfg)
        np.testing.assert_array_equal(first.p_c_given_z, second.p_c_given_z)
        np.testing.assert_array_equal(first.p_z_given_d, second.p_z_given_d)
        self.assertEqual(first.restart_index, second.restart_index)
        self.assertEqual(first.log_likelihood, second.log_likelihood)

    def test_winner_has_best_log_likelihood(self):
        g = from_adjacency_matrix(oracles.random_matrix(5, 15, 0.2))
        finals = defaultdict(float)
        model = phits_fit(
            g,
            PhitsConfig(factors=3, restarts=5),
            callback=lambda r, _it, ll: finals.__setitem__(r, ll),
        )
        best = max(finals.values())
        self.assertEqual(model.log_likelihood, best)
        self.assertEqual(model.restart_index, min(r for r, ll in finals.items() if ll == best))

    def test_simplex_closure(self):
        """Test that every distribution sums to one and stays non-negative."""
        g = from_adjacency_matrix(oracles.random_matrix(9, 20, 0.15))
        model = phits_fit(g, PhitsConfig(factors=4, restarts=2))
        self.assertAlmostEqual(model.p_d.sum(), 1.0, delta=1e-12)
        np.testing.assert_allclose(model.p_z_given_d.sum(axis=1), 1.0, atol=1e-12)
        np.testing.assert_allclose(model.p_c_given_z.sum(axis=0), 1.0, atol=1e-12)
        self.assertTrue((model.p_c_given_z >= 0).all())
        self.assertAlmostEqual(model.p_z().sum(), 1.0, delta=1e-12)

    def test_empty_graph(self):
        with self.assertRaises(EmptyGraph):
            phits_fit(from_edge_list([], nodes=["a", "b"]), PhitsConfig(factors=1))

    def test_factors_exceed_nodes(self):
        with self.assertRaises(FactorsExceedNodes):
            phits_fit(from_edge_list([("a", "b")]), PhitsConfig(factors=3))


class TestPhitsScores(unittest.TestCase):
    """Test cases for scores read off a fitted model."""

    def test_star_single_factor(self):
        g = _star()
        model = phits_fit(g, PhitsConfig(factors=1))
        sink = g.index_of("0")
        authority = phits_authority_scores(model)[0].scores
        np.testing.assert_allclose(authority, np.eye(4)[sink], atol=1e-12)
        self.assertAlmostEqual(phits_characteristic(model)[0].scores[sink], 1.0, delta=1e-12)
        np.testing.assert_allclose(phits_hub_scores(model)[0].scores, [0, 1 / 3, 1 / 3, 1 / 3], atol=1e-12)

    def test_k22_single_factor(self):
        model = phits_fit(_k22(), PhitsConfig(factors=1))
        np.testing.assert_allclose(model.p_c_given_z[:, 0], [0, 0, 0.5, 0.5], atol=1e-12)
        np.testing.assert_allclose(
            phits_characteristic(model)[0].scores, [0, 0, 0.5, 0.5], atol=1e-12
        )

    def test_aggregate_takes_max_over_factors(self):
        g = _two_blocks()
        model = phits_fit(g, PhitsConfig(factors=2, restarts=4))
        aggregate, winners = phits_authority_aggregate(model)
        np.testing.assert_allclose(aggregate.scores, model.p_c_given_z.max(axis=1))
        np.testing.assert_array_equal(winners, np.argmax(model.p_c_given_z, axis=1))

    def test_membership(self):
        g = _k22()
        model = phits_fit(g, PhitsConfig(factors=1))
        np.testing.assert_allclose(phits_membership(model, g.index_of("2")), [1.0])
        model = phits_fit(_two_blocks(), PhitsConfig(factors=2, restarts=4))
        self.assertAlmostEqual(phits_membership(model, 2).sum(), 1.0, delta=1e-12)

    def test_block_authority_belongs_to_its_factor(self):
        model = phits_fit(_two_blocks(), TWO_BLOCKS_FIT)
        for block in BLOCKS:
            for c in block:
                with self.subTest(c=c):
                    membership = phits_membership(model, c)
                    z = int(np.argmax(membership))
                    self.assertGreaterEqual(membership[z], 0.95)
                    self.assertEqual(BLOCKS[_block_of_factor(model, z)[0]], block)

    def test_symmetric_nodes_share_membership(self):
        model = phits_fit(_two_blocks(), TWO_BLOCKS_FIT)
        for first, second in BLOCKS:
            np.testing.assert_allclose(
                phits_membership(model, first), phits_membership(model, second), atol=1e-3
            )
        k22 = phits_fit(_k22(), PhitsConfig(factors=1))
        np.testing.assert_array_equal(phits_membership(k22, 2), phits_membership(k22, 3))

    def test_factor_leaders_stay_in_their_block(self):
        """Test that each factor's top authority and top characteristic node lie in its block."""
        model = phits_fit(_two_blocks(), TWO_BLOCKS_FIT)
        authorities = phits_authority_scores(model)
        characteristic = phits_characteristic(model)
        for z in range(2):
            block = BLOCKS[_block_of_factor(model, z)[0]]
            with self.subTest(factor=z):
                self.assertIn(int(np.argmax(authorities[z].scores)), block)
                self.assertIn(int(np.argmax(characteristic[z].scores)), block)

    def test_membership_never_cited(self):
        model = phits_fit(_k22(), PhitsConfig(factors=1))
        with self.assertRaises(NeverCited):
            phits_membership(model, 0)

    def test_membership_out_of_range(self):
        model = phits_fit(_k22(), PhitsConfig(factors=1))
        for c in (4, -1):
            with self.assertRaises(IndexOutOfRange):
                phits_membership(model, c)


if __name__ == "__main__":
    unittest.main()
