"""
From a PD code to G_n presentations
===================================

Parse a diagram, look at its Wirtinger arcs, and print the
presentations of G_1 and G_2 before and after simplification.
"""

from gnknot.diagram import parse_pd
from gnknot.knots import TREFOIL_PD
from gnknot.presentation import abelianization, gn_presentation, render, tietze_simplify

# Six PD labels, but only three arcs: a label ends whenever it passes under.
trefoil = parse_pd(TREFOIL_PD)
print("crossings", trefoil.crossing_count, "labels", trefoil.arc_count, "arcs", trefoil.generator_count)
print("signs", trefoil.signs, "writhe", trefoil.writhe)

# n = 1 is the usual knot group; larger n raise each conjugator to the n-th power.
for n in (1, 2, 3):
    p = gn_presentation(trefoil, n)
    print("G_%d:" % n, render(p))

# Tietze moves drop a generator from G_1. In G_2 each arc also appears
# squared elsewhere, so substituting it away would lengthen the relators.
for n in (1, 2):
    print("simplified G_%d:" % n, render(tietze_simplify(gn_presentation(trefoil, n))))

# Abelianizing kills the n-th powers, so every knot lands on Z.
print("H_1:", abelianization(gn_presentation(trefoil, 2)))
