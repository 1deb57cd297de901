"""Simple undirected graphs, the graph6 codec, and overfull counting.

Vertices are dense integers 0..n-1 and edges are stored as (low, high)
pairs in sorted order, so every iteration in the package is deterministic.
Graph objects are immutable and hashable; all operations here are pure.
"""

from dataclasses import dataclass
from importlib import resources

MAX_GRAPH6_ORDER = 258048  # short form plus the 3-byte extended form


class Graph6Error(ValueError):
    """Malformed graph6 input; the message names the failing byte offset."""


class SubgraphSearchCapExceeded(ValueError):
    """Raised instead of silently truncating an oversized subgraph search."""


class Graph:
    """Immutable simple graph on vertices 0..n-1 (no loops, no parallels)."""

    __slots__ = ("n", "edges", "_neighbor_masks", "_degrees", "_edge_index", "_hash")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        masks = [0] * n
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            canon.add((u, v))
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.edges = tuple(sorted(canon))
        self._neighbor_masks = tuple(masks)
        self._degrees = tuple(m.bit_count() for m in masks)
        self._edge_index = {e: i for i, e in enumerate(self.edges)}
        self._hash = hash((n, self.edges))

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        return self._degrees[v]

    @property
    def degrees(self):
        return self._degrees

    def neighbors(self, v):
        mask = self._neighbor_masks[v]
        return tuple(u for u in range(self.n) if mask >> u & 1)

    def neighbor_mask(self, v):
        return self._neighbor_masks[v]

    def has_edge(self, u, v):
        return u != v and self._neighbor_masks[u] >> v & 1 == 1

    def edge_id(self, u, v):
        """Index of edge (u,v) into self.edges; KeyError if absent."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    @property
    def max_degree(self):
        return max(self._degrees, default=0)

    @property
    def min_degree(self):
        return min(self._degrees, default=0)

    def is_connected(self):
        """Connectivity is reported as data, never enforced as a precondition."""
        if self.n <= 1:
            return True
        seen = 1
        stack = [0]
        while stack:
            v = stack.pop()
            fresh = self._neighbor_masks[v] & ~seen
            seen |= fresh
            while fresh:
                u = fresh & -fresh
                stack.append(u.bit_length() - 1)
                fresh ^= u
        return seen == (1 << self.n) - 1

    def without_edge(self, u, v):
        """The graph G-e on the same vertex set."""
        e = (u, v) if u < v else (v, u)
        if e not in self._edge_index:
            raise ValueError(f"edge {e} not in graph")
        return Graph(self.n, (f for f in self.edges if f != e))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeSummary:
    max_degree: int
    min_degree: int
    degree_sequence: tuple

    def __post_init__(self):
        assert self.min_degree <= self.max_degree
        assert sum(self.degree_sequence) % 2 == 0


def degree_stats(g: Graph) -> DegreeSummary:
    if g.n < 1:
        raise ValueError("degree_stats needs at least one vertex")
    return DegreeSummary(g.max_degree, g.min_degree, tuple(sorted(g.degrees)))


# ---------------------------------------------------------------------------
# graph6 codec.  Bit layout: the upper triangle of the adjacency matrix in
# column order ((0,1), (0,2), (1,2), (0,3), ...), packed into 6-bit groups,
# each group offset by 63 to land in the printable range 63..126.


def _parse_size(data, offset):
    """Returns (n, next_offset) for the size header starting at offset."""
    b = data[offset]
    if not 63 <= b <= 126:
        raise Graph6Error(f"non-printable byte {b} at offset {offset}")
    if b != 126:
        return b - 63, offset + 1
    if len(data) >= offset + 2 and data[offset + 1] == 126:
        raise Graph6Error(f"8-byte size header at offset {offset} not supported (n >= {MAX_GRAPH6_ORDER})")
    if len(data) < offset + 4:
        raise Graph6Error(f"truncated extended size header at offset {offset}")
    n = 0
    for i in range(1, 4):
        b = data[offset + i]
        if not 63 <= b <= 126:
            raise Graph6Error(f"non-printable byte {b} at offset {offset + i} in size header")
        n = n << 6 | (b - 63)
    return n, offset + 4


def parse_graph6(text) -> Graph:
    """Decode one graph6 record (optionally prefixed with >>graph6<<)."""
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 record")
    n, offset = _parse_size(data, 0)
    for i in range(offset, len(data)):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(f"non-printable byte {data[i]} at offset {i}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - offset < nbytes:
        raise Graph6Error(f"truncated bit section: need {nbytes} bytes after offset {offset}, have {len(data) - offset}")
    if len(data) - offset > nbytes:
        raise Graph6Error(f"unexpected trailing data at offset {offset + nbytes}")
    edges = []
    bit = 0
    group = 0
    u, v = 0, 1
    for i in range(nbits):
        if i % 6 == 0:
            group = data[offset + i // 6] - 63
            bit = 5
        if group >> bit & 1:
            edges.append((u, v))
        bit -= 1
        u += 1
        if u == v:
            u, v = 0, v + 1
    if nbits % 6 and group & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error(f"nonzero padding bits at offset {offset + nbytes - 1}")
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode a graph as a header-free graph6 record."""
    n = g.n
    if n >= MAX_GRAPH6_ORDER:
        raise ValueError(f"graph too large for supported graph6 forms (n={n})")
    if n < 63:
        head = bytes([n + 63])
    else:
        head = bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    bits = []
    for v in range(1, n):
        col = g.neighbor_mask(v)
        for u in range(v):
            bits.append(col >> u & 1)
    body = bytearray()
    for i in range(0, len(bits), 6):
        group = 0
        for j, b in enumerate(bits[i:i + 6]):
            group |= b << (5 - j)
        body.append(group + 63)
    return (head + bytes(body)).decode("ascii")


def iter_graph6(lines):
    """Yield (line_number, record) for nonempty lines of a graph6 stream."""
    for i, line in enumerate(lines, start=1):
        record = line.strip()
        if record:
            yield i, record


# ---------------------------------------------------------------------------
# Overfull counting.


def is_overfull(g: Graph, delta_ref=None) -> bool:
    """|E| > delta_ref * floor(n/2); delta_ref defaults to the graph's own max degree.

    Passing the max degree of a host graph lets subgraphs be tested against it.
    """
    if delta_ref is None:
        delta_ref = g.max_degree
    if delta_ref < g.max_degree:
        raise ValueError(f"delta_ref={delta_ref} below max degree {g.max_degree}")
    return g.m > delta_ref * (g.n // 2)


def deficiency(g: Graph, delta_ref=None) -> int:
    """Sum over vertices of (delta_ref - degree); < delta_ref iff overfull on odd order."""
    if delta_ref is None:
        delta_ref = g.max_degree
    if delta_ref < g.max_degree:
        raise ValueError(f"delta_ref={delta_ref} below max degree {g.max_degree}")
    return delta_ref * g.n - 2 * g.m


def induced_subgraph(g: Graph, vertices):
    """Induced subgraph relabeled to 0..|vs|-1 preserving vertex order.

    Returns (subgraph, labels) where labels[i] is the original name of
    new vertex i.
    """
    labels = tuple(sorted(set(vertices)))
    if not labels:
        raise ValueError("vertex set must be nonempty")
    if labels[0] < 0 or labels[-1] >= g.n:
        raise ValueError(f"vertex out of range in {labels}")
    rename = {v: i for i, v in enumerate(labels)}
    edges = [(rename[u], rename[v]) for u, v in g.edges if u in rename and v in rename]
    return Graph(len(labels), edges), labels


def find_overfull_subgraphs(g: Graph, cap=20):
    """All vertex sets inducing an overfull subgraph of full maximum degree.

    Returns every odd S with Delta(g[S]) = Delta(g) and g[S] overfull
    w.r.t. Delta(g), sorted lexicographically.  The subset tree is pruned
    by two monotone facts: each chosen vertex contributes at least
    Delta - |N(v) & available| to the final deficiency, which must stay
    below Delta; and some vertex must keep its full Delta degree inside S.
    """
    if g.n > cap:
        raise SubgraphSearchCapExceeded(f"n={g.n} exceeds search cap {cap}; raise cap explicitly")
    delta = g.max_degree
    if delta == 0:
        return []
    masks = g._neighbor_masks
    full_vertices = [v for v in range(g.n) if g.degree(v) == delta]
    results = []

    def edge_count(mask):
        total = 0
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            total += (masks[v] & rest).bit_count()
        return total

    def search(v, chosen, chosen_mask, avail_mask):
        # optimistic deficiency: every chosen vertex can at best keep the
        # neighbors still available; shrinking avail only raises this bound
        bound = sum(delta - (masks[u] & (chosen_mask | avail_mask)).bit_count() for u in chosen)
        if bound >= delta:
            return
        reachable = chosen_mask | avail_mask
        if not any(masks[w] & ~reachable == 0 and reachable >> w & 1 for w in full_vertices):
            return
        if v == g.n:
            if len(chosen) % 2 == 1:
                if any(masks[w] & ~chosen_mask == 0 and chosen_mask >> w & 1 for w in full_vertices):
                    if edge_count(chosen_mask) > delta * (len(chosen) // 2):
                        results.append(tuple(chosen))
            return
        bit = 1 << v
        chosen.append(v)
        search(v + 1, chosen, chosen_mask | bit, avail_mask & ~bit)
        chosen.pop()
        search(v + 1, chosen, chosen_mask, avail_mask & ~bit)

    search(0, [], 0, (1 << g.n) - 1)
    results.sort()
    return results


# ---------------------------------------------------------------------------
# Built-in graphs and the bundled corpus.


def complete_graph(n):
    return Graph(n, [(u, v) for v in range(n) for u in range(v)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph():
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def named_graph(key: str) -> Graph:
    """Built-in graphs by key: K<n>, C<n>, petersen, petersen_minus_vertex."""
    if key == "petersen":
        return petersen_graph()
    if key == "petersen_minus_vertex":
        sub, _ = induced_subgraph(petersen_graph(), range(9))
        return sub
    if len(key) > 1 and key[0] in "KC" and key[1:].isdigit():
        size = int(key[1:])
        return complete_graph(size) if key[0] == "K" else cycle_graph(size)
    raise KeyError(f"unknown graph name {key!r}")


def bundled_corpus_path():
    """Filesystem path of the packaged corpus of connected graphs, n <= 8."""
    return resources.files("vizing.data").joinpath("connected_upto8.g6")


def load_bundled_corpus(max_n=8):
    """All bundled connected graphs with at most max_n vertices."""
    graphs = []
    with bundled_corpus_path().open() as fh:
        for _, record in iter_graph6(fh):
            g = parse_graph6(record)
            if g.n <= max_n:
                graphs.append(g)
    return graphs
