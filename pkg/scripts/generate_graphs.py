#!/usr/bin/env python3
"""Generate data/graphs{n}.g6: all non-isomorphic simple graphs, n = 1..8.

Augmentation: every graph on n vertices arises from some graph on n-1
vertices by adding one vertex with some neighbourhood, so extend each
(n-1)-representative by all 2^(n-1) neighbourhoods, bucket candidates by a
cheap invariant (degree profile + rounded spectrum) and deduplicate inside
buckets with VF2.  Output lines are sorted by (edge count, graph6 string),
so the files are reproducible byte for byte.

Expected counts per n: 1, 2, 4, 11, 34, 156, 1044, 12346.
"""

import itertools
import pathlib
import sys

import networkx as nx
import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from ctrlgraph.graphs import Graph, emit_graph6

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
MAX_N = 8


def to_nx(edges, n):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def invariant(g: nx.Graph):
    degs = sorted(d for _, d in g.degree())
    nbr_profile = tuple(
        sorted(tuple(sorted(g.degree(w) for w in g.neighbors(u))) for u in g.nodes())
    )
    spec = tuple(np.round(np.sort(np.linalg.eigvalsh(nx.to_numpy_array(g))), 6))
    return (tuple(degs), nbr_profile, spec)


def augment(reps, n):
    """All non-isomorphic graphs on n vertices from representatives on n-1."""
    buckets = {}
    for parent in reps:
        for mask_bits in range(2 ** (n - 1)):
            edges = list(parent.edges()) + [
                (k, n - 1) for k in range(n - 1) if mask_bits >> k & 1
            ]
            cand = to_nx(edges, n)
            key = invariant(cand)
            bucket = buckets.setdefault(key, [])
            if not any(nx.is_isomorphic(cand, seen) for seen in bucket):
                bucket.append(cand)
    return [g for bucket in buckets.values() for g in bucket]


def main():
    out_dir = pathlib.Path(__file__).resolve().parent.parent / "data"
    out_dir.mkdir(exist_ok=True)
    reps = [to_nx([], 1)]
    for n in range(1, MAX_N + 1):
        if n > 1:
            reps = augment(reps, n)
        if len(reps) != EXPECTED[n]:
            raise SystemExit(
                f"n={n}: generated {len(reps)} graphs, expected {EXPECTED[n]}"
            )
        lines = sorted(
            (g.number_of_edges(), emit_graph6(Graph.from_edges(n, g.edges())))
            for g in reps
        )
        path = out_dir / f"graphs{n}.g6"
        path.write_text("".join(line + "\n" for _, line in lines))
        print(f"n={n}: {len(reps)} graphs -> {path}")


if __name__ == "__main__":
    main()
