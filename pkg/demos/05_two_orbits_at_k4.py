"""
When the divisor enumeration covers more than one orbit
=======================================================

For k = 1, 2, 3 the ambiguous numbers (a + k*sqrt3)/c with integral d are
exactly the orbit of k*sqrt3 under B, C, D. For k = 4 they fall into two
orbits, so the enumeration over-counts a single closed path.
"""

from picard import bfs_orbit_ambiguous, build_graph, canonicalize, enumerate_ambiguous
from picard.graph import components, layer_cycles

for k in range(1, 9):
    members = enumerate_ambiguous(k).member_set
    orbit = set(bfs_orbit_ambiguous(canonicalize(0, k, 1)))
    sizes = sorted(len(c) for c in components(build_graph(k)))
    print(f"k={k}: enumerated {len(members):>3}, orbit of k*sqrt3 {len(orbit):>3}, orbit sizes {sizes}")

g = build_graph(4)
print("k=4 layer cycles:", [len(c) for c in layer_cycles(g)])
