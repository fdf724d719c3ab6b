"""
Reading and writing verification reports (the JSON ledger).

Files are written with sorted keys and entries sorted by id so that runs with
the same configuration produce byte-identical files.
"""

import json
import logging
import os
from matspec.errors import ParseError
from matspec.identities.registry import IdentityCheckReport, REPORT_STATUSES
from matspec.utils import create_folders
from matspec.version import __version__

logger = logging.getLogger(__name__)


def summarize(reports):
    counts = {status: 0 for status in REPORT_STATUSES}
    for report in reports:
        counts[report.status] += 1
    return counts


def reports_to_json(reports, config=None):
    reports = sorted(reports, key=lambda r: r.id)
    return {"version": __version__,
            "config": config.to_json() if config is not None else None,
            "summary": summarize(reports),
            "entries": [r.to_json() for r in reports]}


def write_reports(reports, out_path, config=None, overwrite=True):
    """
    Write a JSON report file.

    Args:
        reports:   (list)      IdentityCheckReport objects
        out_path:  (string)    Output file path
        config:    (RunConfig) Optional run configuration stored with the reports
        overwrite: (bool)      Replace an existing file
    """
    if os.path.exists(out_path) and not overwrite:
        raise OSError(f"Report file at {out_path} already exists. Set --overwrite to replace it.")
    create_folders(os.path.dirname(os.path.abspath(out_path)), create_deep=True)
    with open(out_path, "w") as out_file:
        json.dump(reports_to_json(reports, config), out_file, sort_keys=True, indent=2)
        out_file.write("\n")
    logger.info(f"Saved {len(reports)} entry reports to {out_path}")


def read_reports(path):
    """ Load the IdentityCheckReport list of a JSON report file, sorted by id """
    try:
        with open(path) as in_file:
            obj = json.load(in_file)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise ParseError(f"Report file at {path} is not valid JSON: {e}") from e
    try:
        entries = obj["entries"] if isinstance(obj, dict) else obj
        reports = [IdentityCheckReport.from_json(e) for e in entries]
    except (KeyError, TypeError) as e:
        raise ParseError(f"Report file at {path} does not hold entry reports ({e!r})") from e
    bad = [r.id for r in reports if r.status not in REPORT_STATUSES]
    if bad:
        raise ParseError(f"Report file at {path} has entries with unknown status: {bad}")
    return sorted(reports, key=lambda r: r.id)
