"""Colored configurations around an uncolored edge: multi-fans, Kierstead
paths, forks, branches, and short-branches.

Detectors do exhaustive nested-loop enumeration with distinctness pruning;
at the scale this package targets, correctness and determinism beat
cleverness.  Every detector's output passes the matching validator, and
witness data (which earlier vertex licensed each edge color) is stored at
build time so failure reports can name the exact condition.
"""

from dataclasses import dataclass

from .coloring import ColoringError, PartialColoring, is_elementary, missing_set


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    condition: str = ""
    index: int = 0
    detail: str = ""

    def __bool__(self):
        return self.ok


VALID = ValidationResult(True)


def _canon(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class MultiFan:
    """Fan sequence (x, e_1, y_1, ..., e_p, y_p) with e_i = x y_i.

    witnesses[i-2] is the 1-based fan index j < i whose vertex y_j misses
    the color of e_i (the first such j; None entries never occur in built
    fans).
    """

    center: int
    vertices: tuple
    witnesses: tuple

    @property
    def uncolored_edge(self):
        return _canon(self.center, self.vertices[0])

    def edges(self):
        return [_canon(self.center, y) for y in self.vertices]

    def vertex_set(self):
        return frozenset((self.center,) + self.vertices)

    def dump(self):
        ys = ",".join(map(str, self.vertices))
        ws = ",".join(map(str, self.witnesses)) or "-"
        return f"multifan x={self.center} ys={ys} witnesses={ws}"


@dataclass(frozen=True)
class KiersteadPath:
    """Path sequence (y_0, e_1, y_1, ..., e_p, y_p) with e_i = y_{i-1} y_i.

    witnesses[i-2] is the 0-based sequence index j < i whose vertex misses
    the color of e_i.
    """

    vertices: tuple
    witnesses: tuple

    @property
    def p(self):
        return len(self.vertices) - 1

    @property
    def uncolored_edge(self):
        return _canon(self.vertices[0], self.vertices[1])

    def edges(self):
        return [_canon(self.vertices[i], self.vertices[i + 1]) for i in range(self.p)]

    def dump(self):
        vs = ",".join(map(str, self.vertices))
        ws = ",".join(map(str, self.witnesses)) or "-"
        return f"kpath vs={vs} witnesses={ws}"


@dataclass(frozen=True)
class Fork:
    """Seven distinct vertices whose six edges carry the fork coloring
    pattern around the uncolored edge ab."""

    a: int
    b: int
    u: int
    s1: int
    s2: int
    t1: int
    t2: int
    colors: tuple  # (bu, us1, us2, s1t1, s2t2)

    def dump(self):
        c = self.colors
        return (f"fork a={self.a} b={self.b} u={self.u} s1={self.s1} s2={self.s2} "
                f"t1={self.t1} t2={self.t2} c_bu={c[0]} c_us1={c[1]} c_us2={c[2]} "
                f"c_s1t1={c[3]} c_s2t2={c[4]}")


@dataclass(frozen=True)
class Branch:
    """Fork-shaped subgraph whose two arms form Kierstead paths and whose
    arm-end edges carry the same color."""

    a: int
    b: int
    u: int
    s1: int
    s2: int
    t1: int
    t2: int
    colors: tuple  # (bu, us1, us2, s1t1, s2t2)

    def dump(self):
        c = self.colors
        return (f"branch a={self.a} b={self.b} u={self.u} s1={self.s1} s2={self.s2} "
                f"t1={self.t1} t2={self.t2} c_bu={c[0]} c_us1={c[1]} c_us2={c[2]} "
                f"c_s1t1={c[3]} c_s2t2={c[4]}")


@dataclass(frozen=True)
class ShortBranch:
    """Five distinct vertices a,b,u,x,y with edges ab,bu,ux,uy whose two
    arms form Kierstead paths and whose arm vertices both share a missing
    color with {a, b}."""

    a: int
    b: int
    u: int
    x: int
    y: int
    colors: tuple  # (bu, ux, uy)

    def dump(self):
        c = self.colors
        return (f"shortbranch a={self.a} b={self.b} u={self.u} x={self.x} y={self.y} "
                f"c_bu={c[0]} c_ux={c[1]} c_uy={c[2]}")


# ---------------------------------------------------------------------------
# Multi-fans.


def maximal_multifan(c: PartialColoring, x) -> MultiFan:
    """Greedy closure of the fan at x rooted at the uncolored edge.

    Repeatedly appends the lowest-index unused neighbor whose edge color
    is missing at an earlier fan vertex.  The resulting vertex set is the
    unique maximal one, though intermediate order may differ from other
    valid fan orders.
    """
    if c.uncolored is None or x not in c.uncolored:
        raise ColoringError(f"no uncolored edge at vertex {x}")
    y1 = c.uncolored[0] if c.uncolored[1] == x else c.uncolored[1]
    fan = [y1]
    in_fan = {y1}
    witnesses = []
    union = c.missing_mask(y1)
    while True:
        grown = False
        for w in c.graph.neighbors(x):
            if w in in_fan:
                continue
            color = c.color_of(x, w)  # never None: the only uncolored edge ends at y1
            if union >> (color - 1) & 1:
                fan.append(w)
                in_fan.add(w)
                union |= c.missing_mask(w)
                bit = 1 << (color - 1)
                witnesses.append(next(j + 1 for j, y in enumerate(fan[:-1]) if c.missing_mask(y) & bit))
                grown = True
                break
        if not grown:
            return MultiFan(x, tuple(fan), tuple(witnesses))


def validate_multifan(c: PartialColoring, fan: MultiFan) -> ValidationResult:
    """Check the two fan conditions exactly; name the first failure."""
    x, ys = fan.center, fan.vertices
    if not ys:
        return ValidationResult(False, "F1", 1, "fan needs at least one vertex")
    if c.uncolored is None or _canon(x, ys[0]) != c.uncolored:
        return ValidationResult(False, "F1", 1, "first edge must be the uncolored edge")
    seen = set()
    for i, y in enumerate(ys, start=1):
        if y in seen or y == x:
            return ValidationResult(False, "F1", i, f"vertex {y} repeated")
        seen.add(y)
        if not c.graph.has_edge(x, y):
            return ValidationResult(False, "F1", i, f"({x},{y}) is not an edge")
        if i >= 2:
            color = c.color_of(x, y)
            if color is None:
                return ValidationResult(False, "F1", i, f"edge ({x},{y}) is uncolored")
            bit = 1 << (color - 1)
            if not any(c.missing_mask(ys[j]) & bit for j in range(i - 1)):
                return ValidationResult(False, "F2", i,
                                        f"color {color} of ({x},{y}) missing at no earlier fan vertex")
    if fan.witnesses:
        for i, j in enumerate(fan.witnesses, start=2):
            if i > len(ys):
                return ValidationResult(False, "F2", i, "more witnesses than edges")
            color = c.color_of(x, ys[i - 1])
            if not 1 <= j < i or not c.missing_mask(ys[j - 1]) >> (color - 1) & 1:
                return ValidationResult(False, "F2", i, f"stored witness {j} invalid")
    return VALID


# ---------------------------------------------------------------------------
# Kierstead paths.


def find_kierstead_paths(c: PartialColoring, max_edges, root=None):
    """Depth-first stream of every Kierstead path with up to max_edges edges.

    The sequence starts (root, e, other); root defaults to the smaller
    endpoint of the uncolored edge.  Extensions are tried in ascending
    vertex order, so the stream is lexicographic.
    """
    if c.uncolored is None:
        raise ColoringError("a Kierstead path needs an uncolored root edge")
    if max_edges < 1:
        raise ColoringError("max_edges must be at least 1")
    if root is None:
        root = c.uncolored[0]
    if root not in c.uncolored:
        raise ColoringError(f"root {root} is not an endpoint of the uncolored edge")
    other = c.uncolored[0] if c.uncolored[1] == root else c.uncolored[1]

    seq = [root, other]
    witnesses = []

    def extend():
        yield KiersteadPath(tuple(seq), tuple(witnesses))
        if len(seq) - 1 >= max_edges:
            return
        tail = seq[-1]
        for w in c.graph.neighbors(tail):
            if w in seq:
                continue
            color = c.color_of(tail, w)
            if color is None:
                continue
            bit = 1 << (color - 1)
            witness = next((j for j, y in enumerate(seq) if c.missing_mask(y) & bit), None)
            if witness is None:
                continue
            seq.append(w)
            witnesses.append(witness)
            yield from extend()
            seq.pop()
            witnesses.pop()

    yield from extend()


def validate_kierstead_path(c: PartialColoring, path: KiersteadPath) -> ValidationResult:
    vs = path.vertices
    if len(vs) < 2:
        return ValidationResult(False, "K1", 0, "path needs at least one edge")
    if len(set(vs)) != len(vs):
        return ValidationResult(False, "K1", 0, "vertices repeat")
    if c.uncolored is None or _canon(vs[0], vs[1]) != c.uncolored:
        return ValidationResult(False, "K1", 1, "first edge must be the uncolored edge")
    for i in range(2, len(vs)):
        u, w = vs[i - 1], vs[i]
        if not c.graph.has_edge(u, w):
            return ValidationResult(False, "K1", i, f"({u},{w}) is not an edge")
        color = c.color_of(u, w)
        if color is None:
            return ValidationResult(False, "K1", i, f"edge ({u},{w}) is uncolored")
        bit = 1 << (color - 1)
        if not any(c.missing_mask(vs[j]) & bit for j in range(i)):
            return ValidationResult(False, "K2", i,
                                    f"color {color} of ({u},{w}) missing at no earlier vertex")
    if path.witnesses:
        for i, j in enumerate(path.witnesses, start=2):
            if i >= len(vs) + 1 or not 0 <= j < i:
                return ValidationResult(False, "K2", i, f"stored witness {j} out of range")
            color = c.color_of(vs[i - 1], vs[i])
            if not c.missing_mask(vs[j]) >> (color - 1) & 1:
                return ValidationResult(False, "K2", i, f"stored witness {j} invalid")
    return VALID


# ---------------------------------------------------------------------------
# Forks, branches, short-branches.


def _oriented_root(c, a, b):
    if c.uncolored is None:
        raise ColoringError("fork and branch search needs an uncolored edge")
    if a is None and b is None:
        a, b = c.uncolored
    if _canon(a, b) != c.uncolored:
        raise ColoringError(f"({a},{b}) is not the uncolored edge {c.uncolored}")
    return a, b


def find_forks(c: PartialColoring, a=None, b=None):
    """Every fork with respect to the oriented uncolored edge (a,b).

    Arms are reported once, with s1 < s2; the defining conditions are
    symmetric under swapping the arms.
    """
    a, b = _oriented_root(c, a, b)
    g = c.graph
    miss_a = c.missing_mask(a)
    union_ab = miss_a | c.missing_mask(b)
    forks = []
    for u in g.neighbors(b):
        if u == a:
            continue
        c_bu = c.color_of(b, u)
        if c_bu is None or not miss_a >> (c_bu - 1) & 1:
            continue
        arms = g.neighbors(u)
        for s1 in arms:
            if s1 in (a, b):
                continue
            c1 = c.color_of(u, s1)
            if c1 is None or not union_ab >> (c1 - 1) & 1:
                continue
            for s2 in arms:
                if s2 <= s1 or s2 in (a, b):
                    continue
                c2 = c.color_of(u, s2)
                if c2 is None or not union_ab >> (c2 - 1) & 1:
                    continue
                for t1 in g.neighbors(s1):
                    if t1 in (a, b, u, s1, s2):
                        continue
                    ct1 = c.color_of(s1, t1)
                    if ct1 is None or not union_ab >> (ct1 - 1) & 1:
                        continue
                    for t2 in g.neighbors(s2):
                        if t2 in (a, b, u, s1, s2, t1):
                            continue
                        ct2 = c.color_of(s2, t2)
                        if ct2 is None or not union_ab >> (ct2 - 1) & 1:
                            continue
                        if c.missing_mask(t2) >> (ct1 - 1) & 1 and c.missing_mask(t1) >> (ct2 - 1) & 1:
                            forks.append(Fork(a, b, u, s1, s2, t1, t2, (c_bu, c1, c2, ct1, ct2)))
    return forks


def find_branches(c: PartialColoring, short=False, a=None, b=None):
    """Branches (or short-branches) with respect to the oriented edge (a,b).

    Both arm sequences must validate as Kierstead paths; the validity tests
    are inlined as missing-mask lookups (an edge color never lies in the
    missing set of its own endpoints, so testing against the union over all
    earlier sequence vertices is exactly the path condition).  The long
    form additionally requires equal arm-end colors; the short form
    requires each arm vertex to share a missing color with {a, b}.  Arms
    are canonical (s1 < s2, x < y).
    """
    a, b = _oriented_root(c, a, b)
    g = c.graph
    miss = [c.missing_mask(v) for v in range(g.n)]
    union_ab = miss[a] | miss[b]
    found = []
    for u in g.neighbors(b):
        if u == a:
            continue
        c_bu = c.color_of(b, u)
        if c_bu is None or not union_ab >> (c_bu - 1) & 1:
            continue
        union_abu = union_ab | miss[u]
        arms = [w for w in g.neighbors(u)
                if w not in (a, b) and union_abu >> (c.color_of(u, w) - 1) & 1]
        if short:
            tips = [x for x in arms if miss[x] & union_ab]
            for i, x in enumerate(tips):
                for y in tips[i + 1:]:
                    found.append(ShortBranch(a, b, u, x, y,
                                             (c_bu, c.color_of(u, x), c.color_of(u, y))))
            continue
        for i, s1 in enumerate(arms):
            union1 = union_abu | miss[s1]
            for t1 in g.neighbors(s1):
                if t1 in (a, b, u, s1):
                    continue
                ct = c.color_of(s1, t1)
                if not union1 >> (ct - 1) & 1:
                    continue
                ct_bit = 1 << (ct - 1)
                for s2 in arms[i + 1:]:
                    if s2 == t1 or not (union_abu | miss[s2]) & ct_bit:
                        continue
                    for t2 in g.neighbors(s2):
                        if t2 in (a, b, u, s1, s2, t1):
                            continue
                        if c.color_of(s2, t2) != ct:
                            continue
                        found.append(Branch(a, b, u, s1, s2, t1, t2,
                                            (c_bu, c.color_of(u, s1), c.color_of(u, s2), ct, ct)))
    return found


# ---------------------------------------------------------------------------
# Line-based serialization (round-trips through parse_structure).


def parse_structure(line: str):
    """Rebuild a configuration object from its dump() line."""
    parts = line.split()
    kind = parts[0]
    fields = {}
    for part in parts[1:]:
        key, _, value = part.partition("=")
        fields[key] = value
    if kind == "multifan":
        ys = tuple(int(v) for v in fields["ys"].split(","))
        ws = () if fields["witnesses"] == "-" else tuple(int(v) for v in fields["witnesses"].split(","))
        return MultiFan(int(fields["x"]), ys, ws)
    if kind == "kpath":
        vs = tuple(int(v) for v in fields["vs"].split(","))
        ws = () if fields["witnesses"] == "-" else tuple(int(v) for v in fields["witnesses"].split(","))
        return KiersteadPath(vs, ws)
    ints = {k: int(v) for k, v in fields.items()}
    if kind == "fork":
        return Fork(ints["a"], ints["b"], ints["u"], ints["s1"], ints["s2"], ints["t1"], ints["t2"],
                    (ints["c_bu"], ints["c_us1"], ints["c_us2"], ints["c_s1t1"], ints["c_s2t2"]))
    if kind == "branch":
        return Branch(ints["a"], ints["b"], ints["u"], ints["s1"], ints["s2"], ints["t1"], ints["t2"],
                      (ints["c_bu"], ints["c_us1"], ints["c_us2"], ints["c_s1t1"], ints["c_s2t2"]))
    if kind == "shortbranch":
        return ShortBranch(ints["a"], ints["b"], ints["u"], ints["x"], ints["y"],
                           (ints["c_bu"], ints["c_ux"], ints["c_uy"]))
    raise ValueError(f"unknown structure kind {kind!r}")
