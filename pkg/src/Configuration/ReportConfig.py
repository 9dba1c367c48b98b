"""
Run report format.

The report JSON layout is fixed; REPORT_SCHEMA documents it and is enforced on
every write and read.
"""

REPORT_SCHEMA_VERSION: int = 1
"""Bumped whenever the report layout changes."""

_NULLABLE_NUMBER = {"type": ["number", "null"]}
_NULLABLE_INT = {"type": ["integer", "null"]}
_NULLABLE_STRING = {"type": ["string", "null"]}

REPORT_SCHEMA: dict = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "linkrank run report",
    "type": "object",
    "required": [
        "schema_version", "command", "algorithm", "input", "config",
        "iterations", "converged", "wall_time_seconds", "scores",
    ],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": REPORT_SCHEMA_VERSION},
        "command": {"enum": ["rank", "detect"]},
        "algorithm": {"type": "string"},
        "input": {
            "type": "object",
            "required": ["source", "format", "nodes", "edges", "self_loops_dropped", "duplicates_dropped"],
            "properties": {
                "source": _NULLABLE_STRING,
                "format": {"type": "string"},
                "nodes": {"type": "integer", "minimum": 0},
                "edges": {"type": "integer", "minimum": 0},
                "self_loops_dropped": {"type": "integer", "minimum": 0},
                "duplicates_dropped": {"type": "integer", "minimum": 0},
            },
        },
        "config": {
            "type": "object",
            "required": ["ranking"],
            "properties": {
                "ranking": {"type": "object"},
                "phits": {"type": ["object", "null"]},
                "detection": {"type": ["object", "null"]},
            },
        },
        "iterations": {"type": "integer", "minimum": 0},
        "converged": {"type": "boolean"},
        "wall_time_seconds": _NULLABLE_NUMBER,
        "scores": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "label", "score"],
                "properties": {
                    "index": {"type": "integer", "minimum": 0},
                    "label": {"type": "string"},
                    "score": {"type": "number"},
                    "hub": _NULLABLE_NUMBER,
                    "raw": _NULLABLE_NUMBER,
                    "factor": _NULLABLE_INT,
                },
            },
        },
        "communities": {
            "type": ["array", "null"],
            "items": {
                "type": "object",
                "required": ["page", "index", "score", "members"],
                "properties": {
                    "page": {"type": "string"},
                    "index": {"type": "integer", "minimum": 0},
                    "score": {"type": "number"},
                    "members": {"type": "array", "items": {"type": "string"}},
                    "factor": _NULLABLE_INT,
                    "name": _NULLABLE_STRING,
                    "category": _NULLABLE_STRING,
                },
            },
        },
        "overlap": {
            "type": ["object", "null"],
            "required": ["pairs", "multi_members"],
            "properties": {
                "pairs": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["page_a", "page_b", "shared", "jaccard"],
                        "properties": {
                            "page_a": {"type": "string"},
                            "page_b": {"type": "string"},
                            "shared": {"type": "array", "items": {"type": "string"}},
                            "jaccard": {"type": "number", "minimum": 0, "maximum": 1},
                        },
                    },
                },
                "multi_members": {"type": "array", "items": {"type": "string"}},
            },
        },
    },
}
"""JSON Schema of the report written by `linkrank rank` and `linkrank detect`."""
