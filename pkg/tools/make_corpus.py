#!/usr/bin/env python3
"""Build the bundled corpus of connected graphs on up to 8 vertices.

Graphs on n <= 7 vertices come from the networkx atlas. The 8-vertex
graphs are produced by augmenting every 7-vertex graph with a new vertex
attached to every nonempty neighborhood, keeping the connected results,
and rejecting isomorphic duplicates (Weisfeiler-Lehman hash buckets,
confirmed with VF2). Counts are asserted against the known numbers of
graphs (OEIS A000088) and connected graphs (OEIS A001349) before anything
is written, so a bug here cannot silently ship a wrong corpus.

Output: src/vizing/data/connected_upto8.g6, one header-free graph6 record
per line, sorted by (vertex count, edge count, record).

Usage: python tools/make_corpus.py [output-path]
"""

import sys
import time
from itertools import combinations
from pathlib import Path

import networkx as nx

GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}  # A000088
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}  # A001349


def atlas_by_order():
    per_n = {}
    for g in nx.graph_atlas_g():
        per_n.setdefault(g.number_of_nodes(), []).append(g)
    del per_n[0]
    for n, count in GRAPH_COUNTS.items():
        assert len(per_n[n]) == count, (n, len(per_n[n]))
    return per_n


def connected_eights(seven_vertex_graphs):
    """All connected 8-vertex graphs, one representative per isomorphism class.

    Every connected graph H on 8 vertices arises as (H - v) + v for any
    vertex v, and H - v is one of the 1044 graphs on 7 vertices, so
    augmenting each of those with every nonempty neighborhood covers
    every class.
    """
    buckets = {}
    reps = []
    for base in seven_vertex_graphs:
        for size in range(1, 8):
            for hood in combinations(range(7), size):
                g = base.copy()
                g.add_node(7)
                g.add_edges_from((7, v) for v in hood)
                if not nx.is_connected(g):
                    continue
                key = (g.number_of_edges(), nx.weisfeiler_lehman_graph_hash(g))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(g, seen) for seen in bucket):
                    continue
                bucket.append(g)
                reps.append(g)
    return reps


def main(out_path):
    t0 = time.time()
    per_n = atlas_by_order()
    corpus = {n: [g for g in graphs if nx.is_connected(g)] for n, graphs in per_n.items()}
    corpus[8] = connected_eights(per_n[7])
    for n, count in CONNECTED_COUNTS.items():
        assert len(corpus[n]) == count, (n, len(corpus[n]))

    records = []
    for n in sorted(corpus):
        for g in corpus[n]:
            rec = nx.to_graph6_bytes(g, header=False).decode().strip()
            records.append((n, g.number_of_edges(), rec))
    records.sort()

    out_path.parent.mkdir(parents=True, exist_ok=True)
    with open(out_path, "w") as fh:
        for _, _, rec in records:
            fh.write(rec + "\n")
    print(f"wrote {len(records)} graphs to {out_path} in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    default = Path(__file__).resolve().parent.parent / "src" / "vizing" / "data" / "connected_upto8.g6"
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else default)
