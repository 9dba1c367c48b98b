"""
Pydantic models of the run report.

Field order here is the key order of the written JSON.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from Configuration import REPORT_SCHEMA_VERSION


class _ReportModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class InputSummary(_ReportModel):
    source: Optional[str] = None
    format: str
    nodes: int
    edges: int
    self_loops_dropped: int = 0
    duplicates_dropped: int = 0


class ConfigEcho(_ReportModel):
    """Everything needed to repeat the run."""
    ranking: Dict[str, Any]
    phits: Optional[Dict[str, Any]] = None
    detection: Optional[Dict[str, Any]] = None


class ScoreEntry(_ReportModel):
    index: int
    label: str
    score: float
    hub: Optional[float] = None
    raw: Optional[float] = None
    factor: Optional[int] = None


class CommunityEntry(_ReportModel):
    page: str
    index: int
    score: float
    members: List[str]
    factor: Optional[int] = None
    name: Optional[str] = None
    category: Optional[str] = None


class OverlapPairEntry(_ReportModel):
    page_a: str
    page_b: str
    shared: List[str]
    jaccard: float


class OverlapEntry(_ReportModel):
    pairs: List[OverlapPairEntry] = Field(default_factory=list)
    multi_members: List[str] = Field(default_factory=list)


class RunReport(_ReportModel):
    """Result of one `rank` or `detect` run."""
    schema_version: int = REPORT_SCHEMA_VERSION
    command: str
    algorithm: str
    input: InputSummary
    config: ConfigEcho
    iterations: int
    converged: bool
    wall_time_seconds: Optional[float] = None
    scores: List[ScoreEntry]
    communities: Optional[List[CommunityEntry]] = None
    overlap: Optional[OverlapEntry] = None
