"""Bundled corpus of named presentations with expected values.

Each entry is a pair of files: ``<name>.txt`` in the presentation file
format, and ``<name>.json`` recording what analysis of that presentation
should produce (order, f-vector, flatness, chirality, and so on).  The
data-driven tests and the ``verify`` CLI command run every entry.
"""

from __future__ import annotations

import json
from importlib import resources

from ..presentation import parse_presentation


def _root():
    return resources.files(__package__)


def corpus_names():
    """Sorted names of all bundled entries."""
    return sorted(
        entry.name[:-4] for entry in _root().iterdir()
        if entry.name.endswith(".txt"))


def load_entry(name):
    """(presentation, expected-values dict) for one named entry."""
    text = (_root() / f"{name}.txt").read_text()
    expected = json.loads((_root() / f"{name}.json").read_text())
    return parse_presentation(text), expected


def entry_text(name):
    """Raw presentation file text, for round-trip tests."""
    return (_root() / f"{name}.txt").read_text()
