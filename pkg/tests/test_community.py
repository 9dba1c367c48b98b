"""
Unit tests for community detection and overlap analysis.
"""

import unittest

from pydantic import ValidationError

from Community import Community, detect_communities, overlap, score_nodes, select_communities
from Configuration import Algorithm, DetectionConfig, PhitsConfig
from Graph import from_edge_list
from LinkRank import generate
from Utils.errors import InvalidParams

PHITS_FACTORS = 2


def _config(algorithm: Algorithm, **selection) -> DetectionConfig:
    phits = PhitsConfig(factors=PHITS_FACTORS, restarts=4) if algorithm == Algorithm.PHITS else None
    return DetectionConfig(algorithm=algorithm, phits=phits, **selection)


def _labelled(edges, n):
    return from_edge_list([(str(a), str(b)) for a, b in edges], nodes=[str(i) for i in range(n)])


def _fan_in():
    """Nodes 1..5 linking into node 0."""
    return _labelled([(i, 0) for i in range(1, 6)], 6)


def _with_decoy():
    """Page 0 fed by 1..5, and node 6 fed by 7..11 that also links to 0."""
    edges = [(i, 0) for i in range(1, 6)] + [(i, 6) for i in range(7, 12)] + [(6, 0)]
    return _labelled(edges, 12)


def _community(page, members):
    return Community(page=page, score=1.0, members=tuple(members), algorithm="indegree")


class TestDetectCommunities(unittest.TestCase):
    """Test cases for the detection pipeline across algorithms."""

    def test_fan_in_every_algorithm(self):
        g = _fan_in()
        for algorithm in Algorithm:
            with self.subTest(algorithm=algorithm.value):
                communities = detect_communities(g, _config(algorithm, top_k=1))
                self.assertEqual(len(communities), 1)
                self.assertEqual(communities[0].page, 0)
                self.assertEqual(communities[0].members, (1, 2, 3, 4, 5))
                self.assertEqual(communities[0].algorithm, algorithm.value)

    def test_decoy_with_out_link_is_not_a_page(self):
        g = _with_decoy()
        for algorithm in Algorithm:
            with self.subTest(algorithm=algorithm.value):
                communities = detect_communities(g, _config(algorithm, top_k=2))
                self.assertEqual([c.page for c in communities], [0])
                self.assertEqual(communities[0].members, (1, 2, 3, 4, 5, 6))

    def test_planted_pages_recovered(self):
        """Test that every algorithm finds exactly the planted pages among pages and decoys."""
        g = generate("planted", {"pages": 3, "members_per_page": 5, "decoys": 2})
        pages = {g.index_of(f"page{p}") for p in range(3)}
        for algorithm in Algorithm:
            with self.subTest(algorithm=algorithm.value):
                communities = detect_communities(g, _config(algorithm, top_k=5))
                self.assertEqual({c.page for c in communities}, pages)
                for community in communities:
                    self.assertEqual(community.members, g.in_neighbors(community.page))
                    self.assertEqual(g.out_degree(community.page), 0)

    def test_pages_are_sinks_with_members_on_random_graphs(self):
        checked = 0
        for seed in range(12):
            g = generate("random", {"n": 30, "p": 0.06}, seed=seed)
            if g.m == 0:
                continue
            for algorithm in Algorithm:
                communities = detect_communities(g, _config(algorithm, top_k=10))
                with self.subTest(seed=seed, algorithm=algorithm.value):
                    for community in communities:
                        self.assertEqual(g.out_degree(community.page), 0)
                        self.assertGreaterEqual(len(community.members), 1)
                        self.assertEqual(community.members, g.in_neighbors(community.page))
                checked += len(communities)
        self.assertGreater(checked, 0)

    def test_sorted_by_score_then_page(self):
        g = generate("planted", {"pages": 3, "members_per_page": 4})
        communities = detect_communities(g, _config(Algorithm.INDEGREE, top_k=3))
        keys = [(-c.score, c.page) for c in communities]
        self.assertEqual(keys, sorted(keys))
        self.assertEqual([c.page for c in communities], [0, 1, 2])

    def test_phits_records_factor(self):
        communities = detect_communities(_fan_in(), _config(Algorithm.PHITS, top_k=1))
        self.assertIsNotNone(communities[0].factor)
        indegree = detect_communities(_fan_in(), _config(Algorithm.INDEGREE, top_k=1))
        self.assertIsNone(indegree[0].factor)

    def test_top_k_is_monotone(self):
        """Test that a larger pool never loses a page found by a smaller one."""
        g = generate("planted", {"pages": 4, "members_per_page": 3, "decoys": 3})
        for algorithm in (Algorithm.INDEGREE, Algorithm.PAGERANK, Algorithm.HITS, Algorithm.SALSA):
            previous = set()
            for k in range(1, g.n + 1):
                pages = {c.page for c in detect_communities(g, _config(algorithm, top_k=k))}
                with self.subTest(algorithm=algorithm.value, k=k):
                    self.assertTrue(previous <= pages)
                previous = pages

    def test_members_do_not_depend_on_algorithm(self):
        g = generate("planted", {"pages": 2, "members_per_page": 4, "overlap": 1})
        found = {}
        for algorithm in Algorithm:
            for community in detect_communities(g, _config(algorithm, top_k=g.n)):
                found.setdefault(community.page, set()).add(community.members)
        for page, member_sets in found.items():
            self.assertEqual(member_sets, {g.in_neighbors(page)})

    def test_top_k_above_n_is_capped(self):
        communities = detect_communities(_fan_in(), _config(Algorithm.INDEGREE, top_k=1000))
        self.assertEqual([c.page for c in communities], [0])

    def test_threshold_is_inclusive(self):
        g = _with_decoy()
        ranked = score_nodes(g, Algorithm.INDEGREE)
        communities = select_communities(g, ranked, score_threshold=float(ranked.scores[0]))
        self.assertEqual([c.page for c in communities], [0])
        above = select_communities(g, ranked, score_threshold=float(ranked.scores[0]) + 1.0)
        self.assertEqual(above, [])

    def test_threshold_config(self):
        g = _fan_in()
        communities = detect_communities(g, _config(Algorithm.INDEGREE, score_threshold=0.0))
        self.assertEqual([c.page for c in communities], [0])

    def test_no_sink_gives_empty_result(self):
        g = generate("cycle", {"n": 5})
        self.assertEqual(detect_communities(g, _config(Algorithm.INDEGREE, top_k=5)), [])

    def test_empty_graph(self):
        g = from_edge_list([])
        self.assertEqual(detect_communities(g, _config(Algorithm.PAGERANK, top_k=1)), [])

    def test_select_needs_exactly_one_selector(self):
        g = _fan_in()
        ranked = score_nodes(g, Algorithm.INDEGREE)
        with self.assertRaises(ValueError):
            select_communities(g, ranked)
        with self.assertRaises(ValueError):
            select_communities(g, ranked, top_k=1, score_threshold=0.5)

    def test_score_nodes_phits_needs_config(self):
        with self.assertRaises(InvalidParams):
            score_nodes(_fan_in(), Algorithm.PHITS)


class TestDetectionConfig(unittest.TestCase):
    """Test cases for detection configuration validation."""

    def test_both_selectors(self):
        with self.assertRaises(ValidationError):
            DetectionConfig(algorithm=Algorithm.HITS, top_k=3, score_threshold=0.1)

    def test_no_selector(self):
        with self.assertRaises(ValidationError):
            DetectionConfig(algorithm=Algorithm.HITS)

    def test_top_k_positive(self):
        with self.assertRaises(ValidationError):
            DetectionConfig(algorithm=Algorithm.HITS, top_k=0)

    def test_phits_needs_factors(self):
        with self.assertRaises(ValidationError):
            DetectionConfig(algorithm=Algorithm.PHITS, top_k=1)


class TestOverlap(unittest.TestCase):
    """Test cases for pairwise overlap between communities."""

    def test_planted_overlap(self):
        g = generate("planted", {"pages": 2, "members_per_page": 5, "overlap": 1})
        communities = detect_communities(g, _config(Algorithm.INDEGREE, top_k=2))
        report = overlap(communities)
        self.assertEqual(len(report.pairs), 1)
        self.assertAlmostEqual(report.pairs[0].jaccard, 1 / 9)
        shared = g.index_of("m4")
        self.assertEqual(report.pairs[0].shared, (shared,))
        self.assertEqual(report.multi_members, (shared,))

    def test_jaccard(self):
        report = overlap([_community(10, [1, 2, 3]), _community(11, [3, 4])])
        pair = report.pairs[0]
        self.assertEqual((pair.page_a, pair.page_b, pair.shared), (10, 11, (3,)))
        self.assertAlmostEqual(pair.jaccard, 0.25)

    def test_identical_members(self):
        report = overlap([_community(10, [1, 2]), _community(11, [1, 2])])
        self.assertEqual(report.pairs[0].jaccard, 1.0)
        self.assertEqual(report.multi_members, (1, 2))

    def test_disjoint(self):
        report = overlap([_community(10, [1, 2]), _community(11, [3])])
        self.assertTrue(report.is_empty)
        self.assertEqual(report.multi_members, ())

    def test_three_way_membership(self):
        report = overlap([_community(10, [1, 2]), _community(11, [2, 3]), _community(12, [2, 4])])
        self.assertEqual(len(report.pairs), 3)
        self.assertEqual(report.multi_members, (2,))

    def test_empty(self):
        self.assertTrue(overlap([]).is_empty)


if __name__ == "__main__":
    unittest.main()
