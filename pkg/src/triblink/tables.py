"""Bundled link diagrams and their golden invariant values.

Diagrams cover the prime knots through 8 crossings, the prime links
through 7 crossings, the two trefoil connected sums, the mirror trefoil,
a stabilized alternative trefoil diagram, and the crossingless unknot.
golden.json records, for every entry, the source table rows, the
recomputed values, and the documented discrepancies.
"""

from __future__ import annotations

import json
from importlib import resources

from .diagram import parse_pd

_FILES = resources.files(__package__) / "data"


def golden_tables():
    """The bundled golden-value manifest, keyed by diagram name."""
    return json.loads((_FILES / "golden.json").read_text())


_CACHE = {}


def table_names():
    """All bundled diagram names, sorted."""
    return sorted(golden_tables())


def golden_entry(name):
    g = golden_tables()
    if name not in g:
        raise KeyError("unknown diagram %r; available: %s"
                       % (name, ", ".join(sorted(g))))
    return g[name]


def load_table(name):
    """Parse and return the bundled diagram for a table name."""
    if name not in _CACHE:
        entry = golden_entry(name)
        _CACHE[name] = parse_pd((_FILES / entry["file"]).read_text())
    return _CACHE[name]


def load_diagram(source):
    """A diagram from a table name or a PD text file path."""
    try:
        return load_table(source)
    except KeyError:
        pass
    try:
        with open(source, "r", encoding="utf-8") as fh:
            return parse_pd(fh.read())
    except FileNotFoundError:
        raise KeyError("%r is neither a bundled table name nor a readable "
                       "file; bundled names: %s"
                       % (source, ", ".join(table_names()))) from None
