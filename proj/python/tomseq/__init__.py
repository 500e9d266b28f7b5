"""Subgroup lattices and tables of marks of the symmetric and alternating groups."""

import json as _json

from ._tomseq import *  # noqa: F401,F403
from ._tomseq import report_json as _report_json


def report(family, n_max, tables=()):
    """Computed tables with reference values compared, as a dict."""
    return _json.loads(_report_json(family, n_max, list(tables)))
