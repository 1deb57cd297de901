"""Exact chromatic-index decisions and constructive edge coloring.

The decision engine is exhaustive backtracking over a fixed edge order
(most constrained endpoints first, lexicographic ties) with two sound
prunings: a vertex with fewer free colors than remaining uncolored edges
kills the branch, and a k-coloring can only exist when k * floor(n/2)
matchings can carry all edges.  The single-solution search additionally
breaks color symmetry by allowing at most one brand-new color per step;
the enumerator never does, because it must count labeled colorings.
"""

import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .coloring import PartialColoring
from .graph import Graph


class GraphClass(Enum):
    CLASS1 = 1
    CLASS2 = 2


@dataclass(frozen=True)
class ColoringCertificate:
    """A total proper coloring plus the number of distinct colors it uses."""

    coloring: PartialColoring
    colors_used: int

    def __post_init__(self):
        assert self.coloring.is_total
        assert self.colors_used <= self.coloring.k


@dataclass(frozen=True)
class ColoringBatch:
    """Colorings produced by enumerate_colorings.

    exhaustive is True when the batch provably contains every proper
    coloring; an empty exhaustive batch means none exists.
    """

    colorings: tuple
    exhaustive: bool

    def __iter__(self):
        return iter(self.colorings)

    def __len__(self):
        return len(self.colorings)


def _edge_order(g, skip=None):
    edges = [e for e in g.edges if e != skip]
    edges.sort(key=lambda e: (-max(g.degree(e[0]), g.degree(e[1])), e))
    return edges


def _partial_from_solution(g, k, uncolored, edges, solution):
    colors = [0] * g.m
    present = [0] * g.n
    for (u, v), c in zip(edges, solution):
        colors[g.edge_id(u, v)] = c
        bit = 1 << (c - 1)
        present[u] |= bit
        present[v] |= bit
    return PartialColoring._trusted(g, k, colors, uncolored, present)


def _search(g, k, edges, limit, rng=None, symmetry_break=False):
    """Up to limit proper k-colorings of the given edges, as color tuples.

    Ascending color order per edge gives lexicographic output; rng, when
    given, shuffles the per-edge order instead (used for seeded sampling).
    symmetry_break caps each edge at one more color than seen so far,
    which is sound for existence but not for enumeration.
    """
    m = len(edges)
    if m == 0:
        return [()]
    if k <= 0:
        return []
    full = (1 << k) - 1
    present = [0] * g.n
    undeg = [0] * g.n
    for u, v in edges:
        undeg[u] += 1
        undeg[v] += 1
    chosen = [0] * m
    out = []

    def backtrack(i, max_used):
        if i == m:
            out.append(tuple(chosen))
            return len(out) >= limit
        u, v = edges[i]
        cand = ~(present[u] | present[v]) & full
        if symmetry_break:
            cand &= (1 << min(k, max_used + 1)) - 1
        if not cand:
            return False
        undeg[u] -= 1
        undeg[v] -= 1
        bits = []
        while cand:
            bit = cand & -cand
            bits.append(bit)
            cand ^= bit
        if rng is not None:
            rng.shuffle(bits)
        for bit in bits:
            present[u] |= bit
            present[v] |= bit
            if ((~present[u] & full).bit_count() >= undeg[u]
                    and (~present[v] & full).bit_count() >= undeg[v]):
                c = bit.bit_length()
                chosen[i] = c
                if backtrack(i + 1, max_used if c <= max_used else c):
                    present[u] ^= bit
                    present[v] ^= bit
                    undeg[u] += 1
                    undeg[v] += 1
                    return True
            present[u] ^= bit
            present[v] ^= bit
        undeg[u] += 1
        undeg[v] += 1
        return False

    backtrack(0, 0)
    return out


def edge_colorable(g: Graph, k: int):
    """A proper k-edge-coloring certificate, or None when none exists."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if g.m == 0:
        return ColoringCertificate(PartialColoring(g, k, {}), 0)
    if k < g.max_degree or g.m > k * (g.n // 2):
        return None
    edges = _edge_order(g)
    found = _search(g, k, edges, limit=1, symmetry_break=True)
    if not found:
        return None
    coloring = _partial_from_solution(g, k, None, edges, found[0])
    return ColoringCertificate(coloring, coloring.colors_used())


@lru_cache(maxsize=None)
def chromatic_index(g: Graph) -> int:
    """Least k with a proper k-edge-coloring; always max degree or one more."""
    if g.m == 0:
        return 0
    delta = g.max_degree
    return delta if edge_colorable(g, delta) is not None else delta + 1


def classify(g: Graph) -> GraphClass:
    if g.m == 0:
        raise ValueError("an edgeless graph has no class")
    return GraphClass.CLASS1 if chromatic_index(g) == g.max_degree else GraphClass.CLASS2


def is_critical_edge(g: Graph, e) -> bool:
    """True iff removing e lowers the chromatic index."""
    u, v = e
    return chromatic_index(g.without_edge(u, v)) < chromatic_index(g)


@lru_cache(maxsize=None)
def is_delta_critical(g: Graph) -> bool:
    """Class 2 with every edge critical; requires connected input."""
    if g.m == 0:
        raise ValueError("delta-criticality needs at least one edge")
    if not g.is_connected():
        raise ValueError("delta-criticality is not applicable to disconnected graphs")
    delta = g.max_degree
    if chromatic_index(g) != delta + 1:
        return False
    for e in g.edges:
        if chromatic_index(g.without_edge(*e)) > delta:
            return False
    return True


def enumerate_colorings(g: Graph, e, k: int, budget: int, seed: int = 0,
                        sample_size=None) -> ColoringBatch:
    """Distinct proper k-colorings of g minus e, as partial colorings of g.

    Exhaustive (in lexicographic order over the internal edge order) when
    at most `budget` colorings exist; otherwise a seeded pseudorandom
    sample of `sample_size` (default: budget) distinct colorings obtained
    by restarting the backtracking with shuffled color order.
    """
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    u, v = e
    e = (u, v) if u < v else (v, u)
    if e not in g._edge_index:
        raise ValueError(f"edge {e} not in graph")
    if budget == 0:
        return ColoringBatch((), exhaustive=False)
    edges = _edge_order(g, skip=e)
    solutions = _search(g, k, edges, limit=budget + 1)
    if len(solutions) <= budget:
        colorings = tuple(_partial_from_solution(g, k, e, edges, s) for s in solutions)
        return ColoringBatch(colorings, exhaustive=True)
    target = budget if sample_size is None else sample_size
    seen = {}
    tries = 0
    while len(seen) < target and tries < 50 * target:
        rng = random.Random(seed * 1_000_003 + tries)
        tries += 1
        found = _search(g, k, edges, limit=1, rng=rng)
        if found and found[0] not in seen:
            seen[found[0]] = None
    colorings = tuple(_partial_from_solution(g, k, e, edges, s) for s in seen)
    return ColoringBatch(colorings, exhaustive=False)


# ---------------------------------------------------------------------------
# Constructive coloring with max degree + 1 colors (fan rotation plus at
# most one alternating-path inversion per inserted edge).


def vizing_color(g: Graph) -> ColoringCertificate:
    """A proper coloring with at most max_degree + 1 colors, built edge by edge.

    Deterministic: edges are inserted in sorted order, fans extend with the
    lowest eligible neighbor, and the lowest free color always wins.
    """
    if g.m == 0:
        return ColoringCertificate(PartialColoring(g, 0, {}), 0)
    k = g.max_degree + 1
    full = (1 << k) - 1
    col = [0] * g.m
    present = [0] * g.n

    def set_color(u, v, c):
        i = g.edge_id(u, v)
        old = col[i]
        if old:
            bit = 1 << (old - 1)
            present[u] ^= bit
            present[v] ^= bit
        col[i] = c
        if c:
            bit = 1 << (c - 1)
            present[u] |= bit
            present[v] |= bit

    def lowest_free(v):
        mask = ~present[v] & full
        return (mask & -mask).bit_length()

    def colored_neighbor_via(v, c):
        for w in g.neighbors(v):
            if col[g.edge_id(v, w)] == c:
                return w
        return None

    def invert_path_from(u, c, d):
        # u misses c, so the (c,d)-chain through u starts with a d edge
        path = []
        v, want = u, d
        while True:
            w = colored_neighbor_via(v, want)
            if w is None:
                break
            path.append((v, w, want))
            v, want = w, c + d - want
        for x, y, _ in path:
            set_color(x, y, 0)
        for x, y, old in path:
            set_color(x, y, c + d - old)

    def rotate(u, fan, end):
        # shift each fan color one edge toward the uncolored first edge
        for j in range(end):
            c = col[g.edge_id(u, fan[j + 1])]
            set_color(u, fan[j + 1], 0)
            set_color(u, fan[j], c)

    def fan_prefix_ok(u, fan, end):
        for j in range(1, end + 1):
            c = col[g.edge_id(u, fan[j])]
            if not (~present[fan[j - 1]] & full) >> (c - 1) & 1:
                return False
        return True

    for u, v in g.edges:
        fan = [v]
        in_fan = {v}
        while True:
            free_last = ~present[fan[-1]] & full
            grown = False
            for w in g.neighbors(u):
                if w in in_fan:
                    continue
                c = col[g.edge_id(u, w)]
                if c and free_last >> (c - 1) & 1:
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
            if not grown:
                break
        c = lowest_free(u)
        d = lowest_free(fan[-1])
        if (~present[u] & full) >> (d - 1) & 1:
            rotate(u, fan, len(fan) - 1)
            set_color(u, fan[-1], d)
            continue
        invert_path_from(u, c, d)
        placed = False
        for i, f in enumerate(fan):
            if (~present[f] & full) >> (d - 1) & 1 and fan_prefix_ok(u, fan, i):
                rotate(u, fan, i)
                set_color(u, fan[i], d)
                placed = True
                break
        assert placed, "fan argument failed; coloring logic is broken"

    assignment = {e: c for e, c in zip(g.edges, col)}
    coloring = PartialColoring(g, k, assignment)  # validates properness
    return ColoringCertificate(coloring, coloring.colors_used())
