"""Partial edge colorings, missing-color bookkeeping, and Kempe changes.

A PartialColoring is proper by construction: colors live in 1..k, at most
one distinguished edge is uncolored, and no vertex sees a color twice.
Operations that can break properness (subchain swaps, single-edge
recoloring) return a RelaxedColoring instead, which carries the conflict
list and converts back only when it is actually proper.

Per-vertex color sets are kept as bitmasks (bit c-1 set means color c is
present) and updated incrementally by the Kempe operations; setting DEBUG
to True re-derives every mask from scratch after each operation and
compares, which the heavier verification loops use as a self-check.
"""

from dataclasses import dataclass

from .graph import Graph

DEBUG = False


class ColoringError(ValueError):
    pass


def _canon(u, v):
    return (u, v) if u < v else (v, u)


class PartialColoring:
    """A proper k-edge-coloring of G minus at most one distinguished edge."""

    __slots__ = ("graph", "k", "uncolored", "_colors", "_present")

    def __init__(self, graph: Graph, k: int, assignment, uncolored=None):
        if k < 0:
            raise ColoringError("k must be nonnegative")
        colors = [0] * graph.m
        if uncolored is not None:
            uncolored = _canon(*uncolored)
            if uncolored not in graph._edge_index:
                raise ColoringError(f"uncolored edge {uncolored} not in graph")
        for e, c in dict(assignment).items():
            e = _canon(*e)
            if e == uncolored:
                raise ColoringError(f"distinguished edge {e} must stay uncolored")
            if not 1 <= c <= k:
                raise ColoringError(f"color {c} outside 1..{k}")
            colors[graph.edge_id(*e)] = c
        missing = [graph.edges[i] for i, c in enumerate(colors) if c == 0 and graph.edges[i] != uncolored]
        if missing:
            raise ColoringError(f"edges without a color: {missing[:3]}")
        self.graph = graph
        self.k = k
        self.uncolored = uncolored
        self._colors = tuple(colors)
        self._present = self._derive_present()

    def _derive_present(self):
        present = [0] * self.graph.n
        for (u, v), c in zip(self.graph.edges, self._colors):
            if c == 0:
                continue
            bit = 1 << (c - 1)
            if present[u] & bit:
                raise ColoringError(f"color {c} repeated at vertex {u}")
            if present[v] & bit:
                raise ColoringError(f"color {c} repeated at vertex {v}")
            present[u] |= bit
            present[v] |= bit
        return tuple(present)

    @classmethod
    def _trusted(cls, graph, k, colors, uncolored, present):
        """Internal constructor for operations that maintain masks incrementally."""
        obj = object.__new__(cls)
        obj.graph = graph
        obj.k = k
        obj.uncolored = uncolored
        obj._colors = tuple(colors)
        obj._present = tuple(present)
        if DEBUG:
            assert obj._present == obj._derive_present(), "incremental masks diverged"
            assert all((p | (obj.missing_mask(v))) == (1 << k) - 1 for v, p in enumerate(obj._present))
        return obj

    # -- queries ------------------------------------------------------------

    def color_of(self, u, v):
        """Color of edge (u,v), or None if it is the uncolored edge."""
        c = self._colors[self.graph.edge_id(u, v)]
        return c if c else None

    def present_mask(self, v):
        return self._present[v]

    def missing_mask(self, v):
        return ~self._present[v] & (1 << self.k) - 1

    def edge_at(self, v, color):
        """The edge at v carrying color, or None; properness makes it unique."""
        if not self._present[v] >> (color - 1) & 1:
            return None
        for e in self._incident(v):
            c = self._colors[self.graph.edge_id(*e)]
            if c == color:
                return e
        raise AssertionError("present mask inconsistent with edge colors")

    def _incident(self, v):
        return ((v, w) if v < w else (w, v) for w in self.graph.neighbors(v))

    def assignment(self):
        return {e: c for e, c in zip(self.graph.edges, self._colors) if c}

    @property
    def is_total(self):
        return self.uncolored is None

    def colors_used(self):
        return len(set(c for c in self._colors if c))

    def __eq__(self, other):
        return (isinstance(other, PartialColoring) and self.graph == other.graph
                and self.k == other.k and self.uncolored == other.uncolored
                and self._colors == other._colors)

    def __hash__(self):
        return hash((self.graph, self.k, self.uncolored, self._colors))

    def __repr__(self):
        return f"PartialColoring(k={self.k}, uncolored={self.uncolored})"

    # -- text form ------------------------------------------------------------

    def dump(self):
        """One line per edge "u v c", preceded by an "uncolored u v" line."""
        lines = []
        if self.uncolored is not None:
            lines.append(f"uncolored {self.uncolored[0]} {self.uncolored[1]}")
        for (u, v), c in zip(self.graph.edges, self._colors):
            if c:
                lines.append(f"{u} {v} {c}")
        return "\n".join(lines)

    @classmethod
    def from_dump(cls, graph, k, text):
        uncolored = None
        assignment = {}
        for line in text.splitlines():
            parts = line.split()
            if not parts:
                continue
            if parts[0] == "uncolored":
                uncolored = (int(parts[1]), int(parts[2]))
            else:
                u, v, c = map(int, parts)
                assignment[(u, v)] = c
        return cls(graph, k, assignment, uncolored)


class RelaxedColoring:
    """A possibly improper assignment plus its list of same-color adjacencies."""

    __slots__ = ("graph", "k", "uncolored", "_colors", "conflicts")

    def __init__(self, graph, k, colors, uncolored):
        self.graph = graph
        self.k = k
        self.uncolored = uncolored
        self._colors = tuple(colors)
        conflicts = []
        for v in range(graph.n):
            by_color = {}
            for w in graph.neighbors(v):
                e = _canon(v, w)
                c = colors[graph.edge_id(*e)]
                if c:
                    by_color.setdefault(c, []).append(e)
            for same in by_color.values():
                if len(same) > 1:
                    same.sort()
                    conflicts.extend((same[i], same[j]) for i in range(len(same)) for j in range(i + 1, len(same)))
        self.conflicts = tuple(sorted(set(conflicts)))

    @property
    def proper(self):
        return not self.conflicts

    def color_of(self, u, v):
        c = self._colors[self.graph.edge_id(u, v)]
        return c if c else None

    def to_partial(self) -> PartialColoring:
        if not self.proper:
            raise ColoringError(f"coloring is improper: {self.conflicts[:3]}")
        return PartialColoring(self.graph, self.k,
                               {e: c for e, c in zip(self.graph.edges, self._colors) if c},
                               self.uncolored)

    def __repr__(self):
        return f"RelaxedColoring(proper={self.proper}, conflicts={len(self.conflicts)})"


@dataclass(frozen=True)
class Chain:
    """One maximal (alpha,beta)-chain: an alternating path or even cycle.

    vertices is the canonical traversal (paths run from their smaller
    endpoint; cycles start at their smallest vertex toward its smaller
    neighbor).  edge_colors[i] colors the step leaving vertices[i]; cycles
    carry one closing entry back to vertices[0].
    """

    alpha: int
    beta: int
    kind: str  # "path" or "cycle"
    vertices: tuple
    edge_colors: tuple

    @property
    def is_path(self):
        return self.kind == "path"

    @property
    def endpoints(self):
        if not self.is_path:
            raise ColoringError("cycles have no endvertices")
        return self.vertices[0], self.vertices[-1]

    def edge_steps(self):
        """Pairs ((u,v), color) along the traversal, canonical edge order."""
        steps = []
        for i, c in enumerate(self.edge_colors):
            u = self.vertices[i]
            v = self.vertices[(i + 1) % len(self.vertices)]
            steps.append((_canon(u, v), c))
        return steps

    def position(self, v):
        return self.vertices.index(v)

    def __contains__(self, v):
        return v in self.vertices

    def __len__(self):
        return len(self.edge_colors)


def missing_set(c: PartialColoring, u) -> frozenset:
    """Colors of 1..k on no edge at u."""
    if not 0 <= u < c.graph.n:
        raise ColoringError(f"vertex {u} out of range")
    mask = c.missing_mask(u)
    return frozenset(i + 1 for i in range(c.k) if mask >> i & 1)


def present_set(c: PartialColoring, u) -> frozenset:
    mask = c.present_mask(u)
    return frozenset(i + 1 for i in range(c.k) if mask >> i & 1)


def is_elementary(c: PartialColoring, vertices) -> bool:
    """True iff the missing sets of the given vertices are pairwise disjoint."""
    union = 0
    for v in set(vertices):
        mask = c.missing_mask(v)
        if union & mask:
            return False
        union |= mask
    return True


def chain_at(c: PartialColoring, u, alpha, beta) -> Chain:
    """The unique maximal (alpha,beta)-chain through u.

    A vertex missing both colors yields the legal single-vertex chain.
    Chains of two vertices are identical or vertex-disjoint.
    """
    if alpha == beta:
        raise ColoringError("chain colors must differ")
    for col in (alpha, beta):
        if not 1 <= col <= c.k:
            raise ColoringError(f"color {col} outside 1..{c.k}")
    alpha, beta = min(alpha, beta), max(alpha, beta)

    def walk(start, first_color):
        seq, cols = [start], []
        v, col = start, first_color
        while True:
            e = c.edge_at(v, col)
            if e is None:
                return seq, cols, False
            w = e[0] if e[1] == v else e[1]
            seq.append(w)
            cols.append(col)
            if w == start:
                return seq, cols, True
            v, col = w, alpha + beta - col

    fwd_seq, fwd_cols, is_cycle = walk(u, alpha)
    if is_cycle:
        verts, cols = fwd_seq[:-1], fwd_cols
    else:
        # not a cycle, so the walk with the other color cannot loop either
        back_seq, back_cols, _ = walk(u, beta)
        verts = back_seq[::-1] + fwd_seq[1:]
        cols = back_cols[::-1] + fwd_cols

    if not is_cycle:
        if verts[0] > verts[-1]:
            verts.reverse()
            cols.reverse()
        return Chain(alpha, beta, "path", tuple(verts), tuple(cols))

    # canonical cycle: rotate to the smallest vertex, then to its smaller neighbor
    pivot = verts.index(min(verts))
    verts = verts[pivot:] + verts[:pivot]
    cols = cols[pivot:] + cols[:pivot]
    if verts[-1] < verts[1]:
        verts = [verts[0]] + verts[:0:-1]
        cols = cols[::-1]
    return Chain(alpha, beta, "cycle", tuple(verts), tuple(cols))


def _require_chain_of(c, chain):
    again = chain_at(c, chain.vertices[0], chain.alpha, chain.beta)
    if again != chain:
        raise ColoringError("chain is not a maximal chain of this coloring")


def kempe_change(c: PartialColoring, chain: Chain) -> PartialColoring:
    """Swap alpha and beta on a full chain; properness is preserved and the
    operation is an involution."""
    _require_chain_of(c, chain)
    colors = list(c._colors)
    for (u, v), col in chain.edge_steps():
        colors[c.graph.edge_id(u, v)] = chain.alpha + chain.beta - col
    present = list(c._present)
    if chain.is_path and len(chain) >= 1:
        both = 1 << (chain.alpha - 1) | 1 << (chain.beta - 1)
        for end in chain.endpoints:
            present[end] ^= both
    return PartialColoring._trusted(c.graph, c.k, colors, c.uncolored, present)


def kempe_change_subchain(c: PartialColoring, chain: Chain, a, b) -> RelaxedColoring:
    """Swap alpha and beta only between a and b on a path chain.

    The result may be improper; conflicts are reported on the returned
    RelaxedColoring.  Swapping between the two endvertices equals the full
    Kempe change and stays proper.
    """
    _require_chain_of(c, chain)
    if not chain.is_path:
        raise ColoringError("subchain swaps need a path chain")
    if a not in chain or b not in chain:
        raise ColoringError(f"vertices {a},{b} not on chain")
    lo, hi = sorted((chain.position(a), chain.position(b)))
    colors = list(c._colors)
    steps = chain.edge_steps()
    for i in range(lo, hi):
        (u, v), col = steps[i]
        colors[c.graph.edge_id(u, v)] = chain.alpha + chain.beta - col
    return RelaxedColoring(c.graph, c.k, colors, c.uncolored)


def recolor_edge(c: PartialColoring, e, beta) -> RelaxedColoring:
    """Reassign one colored edge to beta; the result may be improper."""
    e = _canon(*e)
    if e == c.uncolored:
        raise ColoringError("cannot recolor the distinguished uncolored edge")
    if not 1 <= beta <= c.k:
        raise ColoringError(f"color {beta} outside 1..{c.k}")
    idx = c.graph.edge_id(*e)
    colors = list(c._colors)
    colors[idx] = beta
    return RelaxedColoring(c.graph, c.k, colors, c.uncolored)


def meets_before(chain: Chain, u, x, y) -> bool:
    """True iff the chain, read from u, reaches x strictly before y."""
    if not chain.is_path:
        raise ColoringError("traversal order needs a path chain")
    for v in (u, x, y):
        if v not in chain:
            raise ColoringError(f"vertex {v} not on chain")
    pu, px, py = chain.position(u), chain.position(x), chain.position(y)
    if px == py:
        return False
    return min(pu, py) <= px <= max(pu, py) and abs(px - pu) < abs(py - pu)
