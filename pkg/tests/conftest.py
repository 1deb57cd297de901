import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

import vizing as vz

sys.path.insert(0, str(Path(__file__).resolve().parent))

settings.register_profile("deterministic", derandomize=True, deadline=None,
                          max_examples=100,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("deterministic")


@pytest.fixture(scope="session")
def corpus_lines():
    with vz.bundled_corpus_path().open() as fh:
        return fh.read().splitlines()


@pytest.fixture(scope="session")
def corpus(corpus_lines):
    return [vz.parse_graph6(line) for line in corpus_lines]


@pytest.fixture(scope="session")
def class2_graphs(corpus):
    return [g for g in corpus if g.m and vz.chromatic_index(g) == g.max_degree + 1]


@pytest.fixture
def c5_minus_edge():
    """C5 with edge (0,1) uncolored; the path 1-2-3-4-0 colored 1,2,1,2; k=2."""
    g = vz.cycle_graph(5)
    coloring = vz.PartialColoring(g, 2, {(1, 2): 1, (2, 3): 2, (3, 4): 1, (0, 4): 2},
                                  uncolored=(0, 1))
    return g, coloring
