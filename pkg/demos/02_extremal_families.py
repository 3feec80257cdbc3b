"""
Extremal families from blowups
==============================

Replace every vertex of a regular base graph by a K4 or an octahedron and
certify the resulting edge counts, connectivity and cyclicity.
"""

from fractions import Fraction

from forestcut.generators import FamilySpec, base_graph, certify, cubic_bases, k4_blowup
from forestcut.verify import bound_value, check_bound

# K4 blowups of cubic bases: exactly 15n/8 edges, 3-connected, 1-cyclic.
for name in cubic_bases(max_ladder=5):
    spec = FamilySpec("k4_blowup", (name,))
    cert = certify(spec.build(), spec.expected())
    print(f"k4_blowup({name:8s}) {cert.summary():32s} e/n={Fraction(cert.size, cert.order)} ok={cert.ok}")

# Octahedron blowups: 9n/4 edges over cubic bases, 7n/3 over quartic bases.
for base in ("k4", "k33", "k5", "circ6", "circ7"):
    spec = FamilySpec("octa_blowup", (base,))
    cert = certify(spec.build(), spec.expected())
    print(f"octa_blowup({base:6s}) {cert.summary():32s} e/n={Fraction(cert.size, cert.order)} ok={cert.ok}")

# The smallest K4 blowup already beats the 7n/3 - 7/3 edge count asked of
# 3-connected graphs with a cycle around every vertex.
g = k4_blowup(base_graph("k4"))
print("n=16 threshold", bound_value("conj_2", 16), "actual", g.size)
res = check_bound(g, "conj_2")
print(res.status, res.certificates)
