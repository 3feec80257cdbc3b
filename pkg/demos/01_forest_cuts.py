"""
Forest cuts, independent cuts and k-cyclic graphs
=================================================

Small worked examples of the cut searches and the k-cyclic check.
"""

from forestcut import (
    cyclic_witness,
    find_forest_cut,
    find_forest_cut_bruteforce,
    find_independent_cut,
    forest_cut_exists_via_cyclic,
    members,
    vertex_connectivity,
)
from forestcut.generators import cycle, k5_minus_e, k_triangle, octahedron

# The 6-cycle has connectivity 2, so any 2-cut is a forest cut.
c6 = cycle(6)
w = find_forest_cut(c6)
print("C6 forest cut:", members(w.cut), "separating", members(w.side))
print("C6 independent cut:", members(find_independent_cut(c6).cut))

# A triangle plus three common neighbours has no forest cut: the only
# separator is the triangle itself (and supersets of it).
kt3 = k_triangle(3)
print("K^tri_3 forest cut:", find_forest_cut(kt3), "| brute force:", find_forest_cut_bruteforce(kt3))

# The search only looks at connected sets A smaller than n/2 and tests N(A).
# Equivalently: a forest cut exists iff the graph is not k-cyclic for the
# largest k below n/2.
for name, g in [("C6", c6), ("K^tri_3", kt3), ("octahedron", octahedron())]:
    print(f"{name}: kappa={vertex_connectivity(g)} forest cut via cyclic check: {forest_cut_exists_via_cyclic(g)}")

# A cyclic witness is a non-dominating set whose neighbourhood is a forest.
w = cyclic_witness(c6, 1)
print("C6 is not 1-cyclic, witness set", members(w.violating_set), "neighbourhood", members(w.neighborhood))
print("K5-e 2-cyclic witness:", cyclic_witness(k5_minus_e(), 2))
