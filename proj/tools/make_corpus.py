#!/usr/bin/env python3
"""Regenerate data/graphs{6,7}.g6 from the networkx graph atlas.

The atlas lists one representative per isomorphism class for every graph on
up to seven vertices (156 classes on six vertices, 1044 on seven).
"""
import pathlib
import sys

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def main(out_dir: pathlib.Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for n in (6, 7):
        lines = []
        for g in graph_atlas_g():
            if g.number_of_nodes() != n:
                continue
            g = nx.convert_node_labels_to_integers(g, ordering="sorted")
            lines.append(nx.to_graph6_bytes(g, header=False).decode("ascii").strip())
        (out_dir / f"graphs{n}.g6").write_text("\n".join(lines) + "\n", encoding="ascii")
        print(f"graphs{n}.g6: {len(lines)} graphs")


if __name__ == "__main__":
    main(pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data"))
