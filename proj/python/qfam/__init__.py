"""Python access to the qfam checks.

Reports come back as plain dicts with the same layout as the command line's
structured output.
"""

import json

from ._qfam import (
    SCHEMA_VERSION,
    QfamError,
    cancellation_rank,
    coassociativity_defect,
    magic_check,
    morphism_defects,
    permutation_magic_check,
    run_cli,
    set_map_tables,
    suite_names,
    wang_podles_rank,
)
from . import _qfam

__all__ = [
    "SCHEMA_VERSION",
    "QfamError",
    "cancellation_rank",
    "check",
    "coassociativity_defect",
    "magic_check",
    "morphism_defects",
    "parse",
    "permutation_magic_check",
    "run_cli",
    "run_suite",
    "set_map_tables",
    "suite_names",
    "wang_podles_rank",
]


def check(command, *inputs, tol=1e-9, seed=0, suite="all"):
    """Run one subcommand on document paths and return its report."""
    return json.loads(_qfam.check_json(command, [str(p) for p in inputs], tol, seed, suite))


def run_suite(name="all", seed=0):
    return json.loads(_qfam.run_suite_json(name, seed))


def parse(doc):
    """Round-trip a document (dict or JSON text) through the C++ parser."""
    text = doc if isinstance(doc, str) else json.dumps(doc)
    return json.loads(_qfam.parse_json(text))
