"""Independent reference implementations used only by the tests.

Nothing here shares code with the package: the chromatic-index oracle is
plain try-all-k backtracking in input edge order with no ordering
heuristics, no symmetry breaking, and no counting shortcuts; the overfull
subgraph oracle enumerates every odd vertex subset directly.
"""

from itertools import combinations


def naive_chromatic_index(n, edges):
    """Least k admitting a proper edge coloring, by unpruned search from k=1."""
    m = len(edges)
    if m == 0:
        return 0
    clashes = [[j for j in range(i) if set(edges[i]) & set(edges[j])] for i in range(m)]
    k = 0
    while True:
        k += 1
        colors = [0] * m

        def backtrack(i):
            if i == m:
                return True
            for c in range(1, k + 1):
                if all(colors[j] != c for j in clashes[i]):
                    colors[i] = c
                    if backtrack(i + 1):
                        return True
                    colors[i] = 0
            return False

        if backtrack(0):
            return k


def brute_overfull_sets(n, edges):
    """All odd vertex sets whose induced subgraph has the host's max degree
    and more edges than that degree times floor(|S|/2)."""
    degree = [0] * n
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    delta = max(degree, default=0)
    if delta == 0:
        return []
    hits = []
    for size in range(1, n + 1, 2):
        for vs in combinations(range(n), size):
            inside = set(vs)
            sub_edges = [(u, v) for u, v in edges if u in inside and v in inside]
            sub_deg = {v: 0 for v in vs}
            for u, v in sub_edges:
                sub_deg[u] += 1
                sub_deg[v] += 1
            if sub_deg and max(sub_deg.values()) == delta and len(sub_edges) > delta * (size // 2):
                hits.append(tuple(vs))
    return hits


def is_bipartite(n, edges):
    """Two-colorability by breadth-first search."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    side = [None] * n
    for start in range(n):
        if side[start] is not None:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if side[w] is None:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return False
    return True
