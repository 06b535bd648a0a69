"""Regenerate the bundled corpus of connected graphs on 1..7 vertices.

Uses networkx's graph atlas (all graphs up to 7 vertices, one per
isomorphism class) and networkx's own graph6 writer, so the corpus is
independent of this package's encoder.
"""

import pathlib

import networkx as nx

out = pathlib.Path(__file__).resolve().parents[1] / "src" / "kfactor" / "data" / "connected_le7.g6"
lines = []
for g in nx.graph_atlas_g():
    if g.number_of_nodes() >= 1 and nx.is_connected(g):
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
out.write_text("\n".join(lines) + "\n")
print(f"wrote {len(lines)} graphs to {out}")
