"""
The closed path of ambiguous numbers in the orbit of 2*sqrt3
============================================================

Partner (C or C^2) and D edges make two alternating cycles, one per
layer; conjugation and B swap the layers, and the B edges tie them into a
single connected closed path. Writes ``closed_path_k2.dot`` for Graphviz.
"""

from pathlib import Path

from picard import build_graph, check_structure, conj, export_dot, layer_cycles, render
from picard.graph import components

g = build_graph(2)
print(g)
cycles = layer_cycles(g)
for n, cyc in enumerate(cycles):
    print(f"layer {n}: {len(cyc)} vertices")
    print("   " + " ".join(f"{render(v)} -{lab}->" for v, lab in cyc.steps[:6]) + " ...")

layer0, layer1 = (set(c.vertices) for c in cycles)
print("conj swaps layers:", {conj(v) for v in layer0} == layer1)
print("connected with B edges:", len(components(g)) == 1)
print("structural problems:", check_structure(g) or "none")

out = Path("closed_path_k2.dot")
out.write_text(export_dot(g), encoding="utf-8")
print("wrote", out, "- render with: dot -Tsvg", out)
