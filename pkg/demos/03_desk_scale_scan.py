"""
Scanning every small connected graph
====================================

Run the proven bounds, two open conjectures and the degree lemmas over all
connected graphs on at most seven vertices, then over a random sample.
"""

import random
import sys

from forestcut.generators import enumerate_connected, random_connected
from forestcut.verify import scan

corpus = [g for n in range(1, 8) for g in enumerate_connected(n)]
print(len(corpus), "connected graphs on at most 7 vertices")

report = scan(corpus, ["thm_a", "chen_yu", "conj_3n", "thm_b", "thm_c"], lemma_checks=True)
print("\n".join(report.summary_lines()))

# Any violation would be printed as one JSON record per line.
report.write_records(sys.stdout)

# Seeded random graphs on 10 vertices against the 3n - 6 conjecture.
rng = random.Random(7)
sample = [random_connected(10, rng) for _ in range(200)]
report = scan(sample, ["conj_3n", "alpha_fc(11/5)"])
print("\n".join(report.summary_lines()))
