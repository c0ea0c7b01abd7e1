"""Independent oracles and test-only utilities."""

import itertools
import math
import re

from gnknot.presentation import Presentation

_TOKEN = re.compile(r"x(\d+)(?:\^(-?\d+))?")


def parse_presentation(text):
    """Inverse of ``render``; only used to check round trips."""
    m = re.fullmatch(r"<\s*(.*?)\s*\|\s*(.*?)\s*>", text.strip())
    assert m, text
    gens = [g.strip() for g in m.group(1).split(",") if g.strip()]
    relators = []
    for body in [r.strip() for r in m.group(2).split(",") if r.strip()]:
        word = []
        if body != "1":
            for tok in body.split():
                t = _TOKEN.fullmatch(tok)
                assert t, tok
                g, e = int(t.group(1)), int(t.group(2) or 1)
                word.extend([g if e > 0 else -g] * abs(e))
        relators.append(tuple(word))
    return Presentation(len(gens), tuple(relators))


def fox_colorings(diagram, p):
    """Number of Fox p-colorings, by brute force over Z/p for every arc.

    At each crossing 2*over = in + out (mod p).
    """
    arcs = len(diagram.wirtinger_arcs())
    rels = [
        (diagram.arc_of(c.under_in) - 1, diagram.arc_of(c.under_out) - 1, diagram.arc_of(c.over_in) - 1)
        for c in diagram.crossings
    ]
    total = 0
    for colors in itertools.product(range(p), repeat=arcs):
        if all((2 * colors[a] - colors[i] - colors[o]) % p == 0 for i, o, a in rels):
            total += 1
    return total * p ** diagram.unknot_components


def _det(m):
    # exact Laplace expansion; matrices here are tiny
    if len(m) == 1:
        return m[0][0]
    return sum(
        (-1) ** j * m[0][j] * _det([row[:j] + row[j + 1 :] for row in m[1:]])
        for j in range(len(m))
    )


def invariant_factors_by_minors(matrix):
    """Invariant factors d_k = D_k / D_{k-1}, D_k = gcd of all k x k minors."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                g = math.gcd(g, _det([[matrix[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]


def perm_compose(a, b):
    return tuple(a[b[i]] for i in range(len(a)))


def perm_inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def perm_closure(gens):
    """All elements generated by 0-based permutation tuples."""
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = perm_compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def perm_class_sizes(gens):
    els = perm_closure(gens)
    remaining = set(els)
    sizes = []
    while remaining:
        x = next(iter(remaining))
        cls = {perm_compose(perm_compose(g, x), perm_inverse(g)) for g in els}
        remaining -= cls
        sizes.append(len(cls))
    return sorted(sizes)
