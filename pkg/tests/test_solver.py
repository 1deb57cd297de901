import random

import pytest

import vizing as vz
from vizing.solver import GraphClass
from oracles import naive_chromatic_index

PSTAR = vz.named_graph("petersen_minus_vertex")


def test_edge_colorable_examples():
    assert vz.edge_colorable(vz.complete_graph(3), 2) is None
    cert = vz.edge_colorable(vz.complete_graph(3), 3)
    assert cert is not None and cert.colors_used == 3
    assert vz.edge_colorable(vz.petersen_graph(), 3) is None
    assert vz.edge_colorable(vz.petersen_graph(), 4) is not None
    assert vz.edge_colorable(vz.Graph(4), 0) is not None  # edgeless is trivial


def test_edge_colorable_deterministic():
    g = vz.parse_graph6("G?~v_w")
    first = vz.edge_colorable(g, g.max_degree + 1)
    second = vz.edge_colorable(g, g.max_degree + 1)
    assert first.coloring == second.coloring


def test_chromatic_index_examples():
    assert vz.chromatic_index(vz.cycle_graph(5)) == 3
    assert vz.chromatic_index(PSTAR) == 4
    assert vz.chromatic_index(vz.complete_graph(4)) == 3
    assert vz.chromatic_index(vz.Graph(3)) == 0


def test_chromatic_index_against_naive_oracle(corpus):
    for g in [g for g in corpus if g.n <= 5]:
        assert vz.chromatic_index(g) == naive_chromatic_index(g.n, list(g.edges))
    rng = random.Random(9)
    for g in rng.sample([g for g in corpus if g.n == 6], 40):
        assert vz.chromatic_index(g) == naive_chromatic_index(g.n, list(g.edges))


def test_classify():
    assert vz.classify(vz.cycle_graph(5)) is GraphClass.CLASS2
    assert vz.classify(PSTAR) is GraphClass.CLASS2
    assert vz.classify(vz.cycle_graph(6)) is GraphClass.CLASS1
    with pytest.raises(ValueError):
        vz.classify(vz.Graph(2))


def test_is_critical_edge():
    c5 = vz.cycle_graph(5)
    assert all(vz.is_critical_edge(c5, e) for e in c5.edges)
    c6 = vz.cycle_graph(6)
    assert not any(vz.is_critical_edge(c6, e) for e in c6.edges)
    # K5 minus an edge is still overfull for 4 colors, so no edge is critical
    k5 = vz.complete_graph(5)
    assert vz.chromatic_index(k5.without_edge(0, 1)) == 5
    assert not any(vz.is_critical_edge(k5, e) for e in k5.edges)


def test_is_delta_critical():
    assert vz.is_delta_critical(vz.cycle_graph(5))
    assert vz.is_delta_critical(vz.cycle_graph(7))
    assert not vz.is_delta_critical(vz.complete_graph(4))
    assert vz.is_delta_critical(PSTAR)
    assert not vz.is_delta_critical(vz.complete_graph(5))
    with pytest.raises(ValueError):
        vz.is_delta_critical(vz.Graph(4, [(0, 1), (2, 3)]))


def test_delta_critical_min_degree(class2_graphs):
    # every accepted delta-critical graph has minimum degree at least 2
    for g in class2_graphs:
        if vz.is_delta_critical(g):
            assert g.min_degree >= 2


def test_vizing_color_examples(corpus):
    cert = vz.vizing_color(vz.complete_graph(3))
    assert cert.colors_used <= 3 and cert.coloring.is_total
    cert = vz.vizing_color(vz.petersen_graph())
    assert cert.colors_used <= 4
    rng = random.Random(3)
    for g in rng.sample(corpus, 400):
        cert = vz.vizing_color(g)
        assert cert.coloring.is_total
        assert cert.colors_used <= g.max_degree + 1
        if g.m:
            assert cert.colors_used >= vz.chromatic_index(g)


def test_vizing_color_deterministic():
    g = vz.parse_graph6("GCxvbo")
    assert vz.vizing_color(g).coloring == vz.vizing_color(g).coloring


def test_enumerate_colorings_counts():
    c5 = vz.cycle_graph(5)
    batch = vz.enumerate_colorings(c5, (0, 1), 2, budget=10)
    assert batch.exhaustive and len(batch) == 2
    k3 = vz.complete_graph(3)
    batch = vz.enumerate_colorings(k3, (0, 1), 2, budget=10)
    assert batch.exhaustive and len(batch) == 2
    empty = vz.enumerate_colorings(k3, (0, 1), 2, budget=0)
    assert not empty.exhaustive and len(empty) == 0
    # chromatic index of K5 minus an edge exceeds 4: provably empty stream
    none = vz.enumerate_colorings(vz.complete_graph(5), (0, 1), 4, budget=10)
    assert none.exhaustive and len(none) == 0


def test_enumerate_colorings_sampling_deterministic():
    g = vz.complete_graph(6)
    a = vz.enumerate_colorings(g, (0, 1), 6, budget=5, seed=11, sample_size=5)
    b = vz.enumerate_colorings(g, (0, 1), 6, budget=5, seed=11, sample_size=5)
    assert not a.exhaustive
    assert [c.assignment() for c in a] == [c.assignment() for c in b]
    c = vz.enumerate_colorings(g, (0, 1), 6, budget=5, seed=12, sample_size=5)
    assert [x.assignment() for x in a] != [x.assignment() for x in c]
    assert len({tuple(sorted(x.assignment().items())) for x in a}) == 5


def test_enumerate_colorings_are_proper_partials():
    g = PSTAR
    batch = vz.enumerate_colorings(g, (0, 1), 4, budget=50, seed=0, sample_size=20)
    assert len(batch) > 0
    for c in batch:
        assert c.uncolored == (0, 1)
        assert c.k == 4
        rebuilt = vz.PartialColoring(g, 4, c.assignment(), uncolored=(0, 1))
        assert rebuilt == c
