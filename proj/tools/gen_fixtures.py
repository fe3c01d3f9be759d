#!/usr/bin/env python3
"""Regenerate the graph6 fixture files under tests/data.

The enumeration files hold one representative per isomorphism class, taken
from the networkx graph atlas (all graphs on up to 7 vertices).  The same
files can be produced with nauty:

    geng -c 7 > connected_n7.g6     # connected graphs only
    geng 7    > graphs_n7.g6        # all graphs

Line order differs between the two sources; every consumer in this repo is
order independent.
"""
import random
import sys
from pathlib import Path

import networkx as nx


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main(out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    atlas = nx.graph_atlas_g()
    for n in range(1, 8):
        graphs = [g for g in atlas if g.number_of_nodes() == n]
        with open(out_dir / f"graphs_n{n}.g6", "w") as f:
            for g in graphs:
                f.write(g6(g) + "\n")
        with open(out_dir / f"connected_n{n}.g6", "w") as f:
            for g in graphs:
                if nx.is_connected(g):
                    f.write(g6(g) + "\n")

    # Independent decoder cross-check: graph6 text plus its edge list as
    # networkx decodes it.
    rng = random.Random(20141122)
    with open(out_dir / "graph6_crosscheck.txt", "w") as f:
        for i in range(20):
            n = rng.randint(1, 20)
            g = nx.gnp_random_graph(n, rng.random(), seed=rng.randint(0, 10**9))
            text = g6(g)
            back = nx.from_graph6_bytes(text.encode())
            edges = sorted(tuple(sorted(e)) for e in back.edges())
            f.write("%s\t%d\t%s\n" % (text, n, " ".join("%d-%d" % e for e in edges)))


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests" / "data")
