import sys
from dataclasses import replace
from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from sigmagraph.families import build_from_descriptor, corpus_manifest  # noqa: E402
from sigmagraph.groups import DEFAULT_LIMITS  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# lets the lattice of every corpus group be enumerated (largest is order 588)
BIG_LIMITS = replace(DEFAULT_LIMITS, max_lattice_order=2000, max_subgroups=100000)

ACCEPTANCE_LINES: dict[int, str] = {}


@lru_cache(maxsize=None)
def corpus_group(name):
    for d in corpus_manifest():
        if d["name"] == name:
            return build_from_descriptor(d)
    raise KeyError(name)


def corpus(max_order=None, two_generated=True):
    out = []
    for d in corpus_manifest():
        if two_generated is not None and d.get("two_generated", True) != two_generated:
            continue
        if max_order is not None and d["order"] > max_order:
            continue
        out.append(d)
    return out


@pytest.fixture
def group():
    return corpus_group


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
