"""
Per-node score table as CSV.
"""

import logging

import pandas as pd

from .report_models import RunReport

logger = logging.getLogger(__name__)

_COLUMNS = ["index", "label", "score", "hub", "raw", "factor"]
_OPTIONAL = ("hub", "raw", "factor")


def scores_frame(report: RunReport) -> pd.DataFrame:
    """One row per node; columns the algorithm does not produce are dropped."""
    frame = pd.DataFrame([entry.model_dump() for entry in report.scores], columns=_COLUMNS)
    empty = [column for column in _OPTIONAL if frame[column].isna().all()]
    frame = frame.drop(columns=empty)
    if "factor" in frame:
        frame["factor"] = frame["factor"].astype("Int64")
    return frame


def write_scores_csv(report: RunReport) -> str:
    """CSV text of scores_frame, `\\n` line endings."""
    frame = scores_frame(report)
    logger.debug(f"Score table: {len(frame)} rows, columns {list(frame.columns)}")
    return frame.to_csv(index=False, lineterminator="\n")
