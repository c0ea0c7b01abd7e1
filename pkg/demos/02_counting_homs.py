"""
Counting homomorphisms into small groups
========================================

The census search against brute force, and the dihedral case
against Fox colorings.
"""

import time

from gnknot.census import count_homs, count_homs_naive
from gnknot.finite_groups import named
from gnknot.knots import lookup
from gnknot.presentation import gn_presentation

s3 = named("S3")
for name in ("unknot", "trefoil", "figure-8", "5_2"):
    d = lookup(name).diagram
    fast = count_homs(d, 1, s3)
    slow = count_homs_naive(gn_presentation(d, 1), s3)
    print("%-9s |Hom(G_1, S3)| = %3d   brute force %3d" % (name, fast, slow))

# Homs into D_p are p "monochrome" ones plus one per Fox p-coloring,
# so D5 sees the 5-colorable figure-8 and D7 the 7-colorable 5_2.
for p in (3, 5, 7):
    h = named("D%d" % p)
    row = [count_homs(lookup(k).diagram, 1, h) for k in ("trefoil", "figure-8", "5_2")]
    print("D%d" % p, row)

# Raising n changes the counts; the default panel at n = 1, 2, 3:
d = lookup("figure-8").diagram
for g in ("A4", "S4", "A5", "S5"):
    h = named(g)
    t0 = time.perf_counter()
    counts = [count_homs(d, n, h) for n in (1, 2, 3)]
    print("%-3s %s  (%.3fs)" % (g, counts, time.perf_counter() - t0))
