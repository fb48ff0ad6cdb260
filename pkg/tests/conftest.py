import pytest

from polyflag.presentation import REFLECTION
from polyflag.corpus import corpus_names, load_entry
from polyflag.stringc import build_string_group
from polyflag.chiral import build_rotation_group
from polyflag.analysis import analyze


@pytest.fixture(scope="session")
def corpus_entries():
    """name -> (presentation, expected dict) for the whole corpus."""
    return {name: load_entry(name) for name in corpus_names()}


@pytest.fixture(scope="session")
def built_groups(corpus_entries):
    """name -> StringGroup or RotationGroup, built once for the session."""
    out = {}
    for name, (pres, _) in corpus_entries.items():
        if pres.kind == REFLECTION:
            out[name] = build_string_group(pres)
        else:
            out[name] = build_rotation_group(pres)
    return out


@pytest.fixture(scope="session")
def reflection_reports(corpus_entries, built_groups):
    """name -> AnalysisReport for every reflection-kind entry."""
    return {
        name: analyze(built_groups[name])
        for name, (pres, _) in corpus_entries.items()
        if pres.kind == REFLECTION
    }
