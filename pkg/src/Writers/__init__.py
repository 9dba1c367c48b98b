"""
Writers for linkrank outputs: run reports, score tables and graph exports.
"""

from .dot_writer import export_dot
from .graphml_writer import export_graphml, to_networkx
from .report_models import (
    CommunityEntry,
    ConfigEcho,
    InputSummary,
    OverlapEntry,
    OverlapPairEntry,
    RunReport,
    ScoreEntry,
)
from .report_writer import dump_json, parse_report, report_payload, write_report
from .scores_writer import scores_frame, write_scores_csv

__all__ = [
    "export_dot",
    "export_graphml",
    "to_networkx",
    "RunReport",
    "InputSummary",
    "ConfigEcho",
    "ScoreEntry",
    "CommunityEntry",
    "OverlapEntry",
    "OverlapPairEntry",
    "write_report",
    "parse_report",
    "report_payload",
    "dump_json",
    "scores_frame",
    "write_scores_csv",
]
