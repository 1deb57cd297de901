import pytest

import vizing as vz
from vizing.coloring import ColoringError


def test_construction_validates_properness():
    k3 = vz.complete_graph(3)
    with pytest.raises(ColoringError, match="repeated"):
        vz.PartialColoring(k3, 3, {(0, 1): 1, (0, 2): 1, (1, 2): 2})
    with pytest.raises(ColoringError, match="without a color"):
        vz.PartialColoring(k3, 3, {(0, 1): 1})
    with pytest.raises(ColoringError, match="outside"):
        vz.PartialColoring(k3, 2, {(0, 1): 3, (0, 2): 1, (1, 2): 2})
    total = vz.PartialColoring(k3, 3, {(0, 1): 1, (0, 2): 2, (1, 2): 3})
    assert total.is_total and total.colors_used() == 3


def test_missing_set_examples(c5_minus_edge):
    _, c = c5_minus_edge
    assert vz.missing_set(c, 0) == {1}
    assert vz.missing_set(c, 1) == {2}
    k3 = vz.complete_graph(3)
    total = vz.PartialColoring(k3, 3, {(0, 1): 1, (0, 2): 2, (1, 2): 3})
    for v in range(3):
        assert len(vz.missing_set(total, v)) == 1  # k - d = 1
    lonely = vz.PartialColoring(vz.Graph(3, [(0, 1)]), 5, {(0, 1): 4})
    assert vz.missing_set(lonely, 2) == {1, 2, 3, 4, 5}


def test_color_count_identity(c5_minus_edge):
    g, c = c5_minus_edge
    for v in range(g.n):
        assert len(vz.present_set(c, v)) + len(vz.missing_set(c, v)) == c.k
    # endpoints of the uncolored edge miss one extra color
    assert len(vz.missing_set(c, 0)) == c.k - g.degree(0) + 1


def test_is_elementary(c5_minus_edge):
    _, c = c5_minus_edge
    assert vz.is_elementary(c, [0])
    assert vz.is_elementary(c, [0, 1])
    bare = vz.PartialColoring(vz.Graph(2), 1, {})
    assert not vz.is_elementary(bare, [0, 1])  # both miss color 1


def test_recolor_edge(c5_minus_edge):
    _, c = c5_minus_edge
    same = vz.recolor_edge(c, (2, 3), 2)
    assert same.proper and same.to_partial() == c
    k3 = vz.complete_graph(3)
    total = vz.PartialColoring(k3, 3, {(0, 1): 1, (0, 2): 2, (1, 2): 3})
    clash = vz.recolor_edge(total, (0, 1), 2)
    assert not clash.proper and len(clash.conflicts) == 1
    with pytest.raises(ColoringError):
        clash.to_partial()
    with pytest.raises(ColoringError):
        vz.recolor_edge(c, (0, 1), 2)  # the uncolored edge stays uncolored
    # with a third color available, recoloring the last path edge to a color
    # missing at both endpoints stays proper
    g = vz.cycle_graph(5)
    wide = vz.PartialColoring(g, 3, {(1, 2): 1, (2, 3): 2, (3, 4): 1, (0, 4): 2},
                              uncolored=(0, 1))
    assert vz.missing_set(wide, 0) & vz.missing_set(wide, 4) == {3}
    assert vz.recolor_edge(wide, (0, 4), 3).proper


def test_dump_round_trip(c5_minus_edge):
    g, c = c5_minus_edge
    text = c.dump()
    assert text.splitlines()[0] == "uncolored 0 1"
    assert vz.PartialColoring.from_dump(g, c.k, text) == c
    total = vz.PartialColoring(vz.complete_graph(3), 3, {(0, 1): 1, (0, 2): 2, (1, 2): 3})
    assert vz.PartialColoring.from_dump(vz.complete_graph(3), 3, total.dump()) == total


def test_debug_mode_cross_checks(c5_minus_edge):
    _, c = c5_minus_edge
    vz.coloring.DEBUG = True
    try:
        ch = vz.chain_at(c, 0, 1, 2)
        swapped = vz.kempe_change(c, ch)
        assert vz.kempe_change(swapped, vz.chain_at(swapped, 0, 1, 2)) == c
    finally:
        vz.coloring.DEBUG = False
