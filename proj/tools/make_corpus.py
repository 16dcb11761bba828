#!/usr/bin/env python3
"""Writes every connected graph on 1..7 vertices (one per isomorphism class,
from the networkx graph atlas) as graph6, one per line."""
import sys

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def main() -> None:
    out = sys.stdout if len(sys.argv) < 2 else open(sys.argv[1], "w")
    max_n = 7 if len(sys.argv) < 3 else int(sys.argv[2])
    for g in graph_atlas_g():
        if 1 <= g.number_of_nodes() <= max_n and nx.is_connected(g):
            out.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")


if __name__ == "__main__":
    main()
