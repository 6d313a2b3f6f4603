#!/usr/bin/env python3
"""Generate connected non-isomorphic graphs of order 1..N as graph6 files.

Every connected graph of order n+1 has a non-cut vertex, so extending each
connected graph of order n by one vertex with every nonempty neighbourhood
reaches all of them. Duplicates are removed with nauty canonical
certificates (pynauty).

    python3 scripts/gen_corpus.py --max-order 8 --out corpus

If `geng` is on PATH, `scripts/geng_corpus.sh` gives the same files.
"""
import argparse
import itertools
import os

import networkx as nx
import pynauty

EXPECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}


def certificate(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def extend(n, graphs):
    seen = {}
    for edges in graphs:
        for r in range(1, n + 1):
            for nbrs in itertools.combinations(range(n), r):
                new = edges + [(u, n) for u in nbrs]
                cert = certificate(n + 1, new)
                if cert not in seen:
                    seen[cert] = new
    return list(seen.values())


def to_g6(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=8)
    ap.add_argument("--out", default="corpus")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    graphs = [[]]
    for n in range(1, args.max_order + 1):
        if n > 1:
            graphs = extend(n - 1, graphs)
        if n in EXPECTED and len(graphs) != EXPECTED[n]:
            raise SystemExit(f"order {n}: got {len(graphs)}, expected {EXPECTED[n]}")
        lines = sorted(to_g6(n, e) for e in graphs)
        with open(os.path.join(args.out, f"connected_n{n}.g6"), "w") as f:
            f.write("\n".join(lines) + "\n")
        print(f"order {n}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
