"""
Square and granny through finite groups
=======================================

The two composites have isomorphic knot groups and non-isomorphic G_2.
Here we look for a finite group whose hom count tells them apart,
and see why no such group exists.
"""

from gnknot.census import DEFAULT_PANEL, count_homs, count_homs_fixed, distinguish
from gnknot.diagram import mirror
from gnknot.finite_groups import named
from gnknot.knots import lookup

square, granny = lookup("square").diagram, lookup("granny").diagram
panel = [named(t) for t in DEFAULT_PANEL]

for n in (1, 2, 3):
    print("n=%d:" % n, distinguish(square, granny, panel, [n]))

# Splicing two knots glues their meridians, so a count over K1 # K2 is
# sum_e N1(e) N2(e), where N(e) counts homs sending the first arc to e.
trefoil = lookup("trefoil").diagram
h, n = named("A5"), 2
n_t = [count_homs_fixed(trefoil, n, h, e) for e in range(h.order)]
n_m = [count_homs_fixed(mirror(trefoil), n, h, e) for e in range(h.order)]
print("granny", count_homs(granny, n, h), "=", sum(a * a for a in n_t))
print("square", count_homs(square, n, h), "=", sum(a * b for a, b in zip(n_t, n_m)))

# The mirror inverts the meridian, N_m(e) = N(e^-1), and the trefoil is
# invertible, N(e) = N(e^-1). The two sums are therefore equal for every
# finite group and every n.
print("N_m(e) == N(e^-1):", all(n_m[e] == n_t[h.inv(e)] for e in range(h.order)))
print("N(e) == N(e^-1):  ", all(n_t[e] == n_t[h.inv(e)] for e in range(h.order)))
