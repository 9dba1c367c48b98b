"""
Run service for linkrank.

This module loads a graph in any supported format, runs ranking or community
detection on it and assembles the run report. The CLI is a thin layer over it.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional

import numpy as np

from Community import Community, NodeScores, overlap, score_nodes, select_communities
from Configuration import (
    Algorithm,
    DetectionConfig,
    InputFormats,
    PhitsConfig,
    RankingConfig,
    REPORT_SCHEMA_VERSION,
)
from FileSystem import FileSystem, filesystem_for
from Graph import DirectedGraph
from Utils.errors import InputError
from Writers import (
    CommunityEntry,
    ConfigEcho,
    InputSummary,
    OverlapEntry,
    OverlapPairEntry,
    RunReport,
    ScoreEntry,
    report_payload,
)

from .Parser import (
    NodeMetadata,
    parse_adjacency_matrix_csv,
    parse_edge_list,
    parse_social_graph_json,
)


@dataclass(frozen=True)
class LoadedGraph:
    """A parsed input and where it came from."""
    graph: DirectedGraph
    format: str
    source: Optional[str] = None
    metadata: Dict[str, NodeMetadata] = field(default_factory=dict)


@dataclass(frozen=True)
class DetectionOutcome:
    report: RunReport
    communities: List[Community]


class RunService:
    """
    Orchestrates one linkrank pipeline run.

    Reads go through the FileSystem picked for each path, so `memory://` and
    local paths can be mixed freely.
    """

    def __init__(
        self,
        fs_resolver: Callable[[str], FileSystem] = filesystem_for,
        record_timing: bool = False,
    ) -> None:
        """
        Initialize the run service.

        Args:
            fs_resolver: Returns the FileSystem for a path
            record_timing: Fill `wall_time_seconds` in reports. Off by default so
                repeated runs produce byte-identical reports.
        """
        self.fs_resolver = fs_resolver
        self.record_timing = record_timing
        self.logger = logging.getLogger(__name__)

    # -- input and output --------------------------------------------------

    def read_text(self, path: str) -> str:
        return self.fs_resolver(path).read_text(path)

    def write_text(self, path: str, text: str) -> None:
        self.fs_resolver(path).write_text(path, text)
        self.logger.info(f"Wrote {path}")

    def parse_graph(self, text: str, fmt: str, source: Optional[str] = None) -> LoadedGraph:
        """
        Parse text in one of the input formats.

        Raises:
            InputError: If the format is unknown or the text is malformed
        """
        if fmt == InputFormats.EDGES:
            return LoadedGraph(parse_edge_list(text), fmt, source)
        if fmt == InputFormats.MATRIX:
            return LoadedGraph(parse_adjacency_matrix_csv(text), fmt, source)
        if fmt == InputFormats.FBJSON:
            graph, metadata = parse_social_graph_json(text)
            return LoadedGraph(graph, fmt, source, metadata)
        raise InputError(f"Unknown input format {fmt!r}; expected one of {', '.join(InputFormats.ALL)}")

    def load_graph(self, source: str, fmt: str) -> LoadedGraph:
        self.logger.info(f"Loading {fmt} graph from {source}")
        loaded = self.parse_graph(self.read_text(source), fmt, source)
        self.logger.info(f"Graph has {loaded.graph.n} nodes and {loaded.graph.m} edges")
        return loaded

    # -- runs --------------------------------------------------------------

    def rank(
        self,
        loaded: LoadedGraph,
        algorithm: Algorithm,
        ranking: RankingConfig,
        phits: Optional[PhitsConfig] = None,
    ) -> RunReport:
        """Score every node with one algorithm."""
        self.logger.info(f"Ranking with {algorithm.value}")
        started = time.perf_counter()
        ranked = score_nodes(loaded.graph, algorithm, ranking, phits)
        elapsed = time.perf_counter() - started
        return self._report("rank", loaded, ranked, ranking, phits, None, elapsed)

    def detect(self, loaded: LoadedGraph, cfg: DetectionConfig) -> DetectionOutcome:
        """Run community detection and attach communities and overlap to the report."""
        g = loaded.graph
        self.logger.info(f"Detecting communities with {cfg.algorithm.value}")
        started = time.perf_counter()
        if g.n == 0:
            ranked = NodeScores(cfg.algorithm.value, np.zeros(0), 0, True)
            communities: List[Community] = []
        else:
            ranked = score_nodes(g, cfg.algorithm, cfg.ranking, cfg.phits)
            communities = select_communities(g, ranked, cfg.top_k, cfg.score_threshold)
        elapsed = time.perf_counter() - started

        report = self._report("detect", loaded, ranked, cfg.ranking, cfg.phits, cfg, elapsed)
        report.communities = [self._community_entry(loaded, c) for c in communities]
        analysis = overlap(communities)
        labels = g.labels
        report.overlap = OverlapEntry(
            pairs=[
                OverlapPairEntry(
                    page_a=labels[pair.page_a],
                    page_b=labels[pair.page_b],
                    shared=[labels[i] for i in pair.shared],
                    jaccard=pair.jaccard,
                )
                for pair in analysis.pairs
            ],
            multi_members=[labels[i] for i in analysis.multi_members],
        )
        self.logger.info(f"Found {len(communities)} communities")
        return DetectionOutcome(report, communities)

    def compare(
        self,
        loaded: LoadedGraph,
        configs: Iterable[DetectionConfig],
    ) -> Dict[str, Any]:
        """
        Detect with several algorithms on one graph.

        Returns:
            A JSON-ready document with one schema-valid report per algorithm and
            the labels of the pages every algorithm found
        """
        reports: Dict[str, Any] = {}
        page_sets = []
        for cfg in configs:
            outcome = self.detect(loaded, cfg)
            reports[cfg.algorithm.value] = report_payload(outcome.report)
            page_sets.append({loaded.graph.label_of(c.page) for c in outcome.communities})

        common = set.intersection(*page_sets) if page_sets else set()
        order = {label: i for i, label in enumerate(loaded.graph.labels)}
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "command": "compare",
            "input": self._input_summary(loaded).model_dump(mode="json"),
            "common_pages": sorted(common, key=order.__getitem__),
            "reports": reports,
        }

    # -- report assembly ---------------------------------------------------

    def _input_summary(self, loaded: LoadedGraph) -> InputSummary:
        g = loaded.graph
        return InputSummary(
            source=loaded.source,
            format=loaded.format,
            nodes=g.n,
            edges=g.m,
            self_loops_dropped=g.build_info.self_loops_dropped,
            duplicates_dropped=g.build_info.duplicates_dropped,
        )

    def _report(
        self,
        command: str,
        loaded: LoadedGraph,
        ranked: NodeScores,
        ranking: RankingConfig,
        phits: Optional[PhitsConfig],
        detection: Optional[DetectionConfig],
        elapsed: float,
    ) -> RunReport:
        labels = loaded.graph.labels
        scores = [
            ScoreEntry(
                index=i,
                label=labels[i],
                score=float(ranked.scores[i]),
                hub=float(ranked.hubs[i]) if ranked.hubs is not None else None,
                raw=float(ranked.raw[i]) if ranked.raw is not None else None,
                factor=int(ranked.factors[i]) if ranked.factors is not None else None,
            )
            for i in range(len(ranked.scores))
        ]
        uses_phits = ranked.algorithm == Algorithm.PHITS.value
        echo = ConfigEcho(
            ranking=ranking.model_dump(mode="json"),
            phits=phits.model_dump(mode="json") if (phits is not None and uses_phits) else None,
            detection=(
                detection.model_dump(mode="json", include={"algorithm", "top_k", "score_threshold"})
                if detection is not None
                else None
            ),
        )
        if not ranked.converged:
            self.logger.warning(
                f"{ranked.algorithm} stopped after {ranked.iterations} iterations without converging"
            )
        return RunReport(
            command=command,
            algorithm=ranked.algorithm,
            input=self._input_summary(loaded),
            config=echo,
            iterations=ranked.iterations,
            converged=ranked.converged,
            wall_time_seconds=elapsed if self.record_timing else None,
            scores=scores,
        )

    def _community_entry(self, loaded: LoadedGraph, community: Community) -> CommunityEntry:
        labels = loaded.graph.labels
        label = labels[community.page]
        meta = loaded.metadata.get(label)
        return CommunityEntry(
            page=label,
            index=community.page,
            score=community.score,
            members=[labels[i] for i in community.members],
            factor=community.factor,
            name=meta.name if meta else None,
            category=meta.category if meta else None,
        )
