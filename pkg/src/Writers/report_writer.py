"""
Report JSON serialization.

Reports are validated against REPORT_SCHEMA on the way out and on the way in.
Floats are written with the shortest repr that reads back to the same double
(at most 17 significant digits), so a parsed report carries exactly the scores
that were written.
"""

import json
import logging
from typing import Any, Dict

import jsonschema

from Configuration import REPORT_SCHEMA
from Utils.errors import InputError

from .report_models import RunReport

logger = logging.getLogger(__name__)

_VALIDATOR = jsonschema.Draft7Validator(REPORT_SCHEMA)


def dump_json(payload: Any) -> str:
    """Indented JSON with a trailing newline; NaN and infinity are refused."""
    return json.dumps(payload, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def report_payload(report: RunReport) -> Dict[str, Any]:
    """The report as a schema-valid JSON object."""
    payload = report.model_dump(mode="json")
    _VALIDATOR.validate(payload)
    return payload


def write_report(report: RunReport) -> str:
    """
    Serialize a report.

    Raises:
        jsonschema.ValidationError: If the report does not match REPORT_SCHEMA
    """
    return dump_json(report_payload(report))


def parse_report(text: str) -> RunReport:
    """
    Read a report back.

    Raises:
        InputError: If the text is not JSON or does not match REPORT_SCHEMA
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"Report is not valid JSON: {e}") from e

    errors = sorted(_VALIDATOR.iter_errors(payload), key=lambda err: list(err.path))
    if errors:
        first = errors[0]
        location = "/".join(str(part) for part in first.path) or "<root>"
        raise InputError(f"Report does not match schema at {location}: {first.message}")

    logger.debug(f"Parsed {payload['command']} report for {payload['algorithm']}")
    return RunReport.model_validate(payload)
