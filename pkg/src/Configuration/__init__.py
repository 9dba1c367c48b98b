"""
Initializes the Configuration package.

This module provides centralized access to all defaults, enums and run
configuration models.
"""

from .RankingConfig import NormKind, PageRankMode, RankingConfig, RankingDefaults, SalsaMethod
from .PhitsConfig import PhitsConfig, PhitsDefaults
from .DetectionConfig import Algorithm, DetectionConfig, DetectionDefaults
from .ExportConfig import ExportConfig
from .GlobalConfig import InputFormats, RegularExpressions
from .ReportConfig import REPORT_SCHEMA, REPORT_SCHEMA_VERSION

__all__ = [
    # Ranking
    "NormKind",
    "PageRankMode",
    "SalsaMethod",
    "RankingConfig",
    "RankingDefaults",

    # PHITS
    "PhitsConfig",
    "PhitsDefaults",

    # Detection
    "Algorithm",
    "DetectionConfig",
    "DetectionDefaults",

    # Export and report
    "ExportConfig",
    "REPORT_SCHEMA",
    "REPORT_SCHEMA_VERSION",

    # Global constants
    "InputFormats",
    "RegularExpressions",
]
