"""Wirtinger presentations, their G_n generalization, abelianization and
conservative Tietze simplification.

Words are tuples of nonzero ints: ``+i`` is ``x_i`` and ``-i`` its inverse.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagram import Diagram
from .errors import EmptyDiagram

__all__ = [
    "Word",
    "Presentation",
    "CrossingRelation",
    "AbelianInvariants",
    "free_reduce",
    "cyclic_reduce",
    "wirtinger_relations",
    "gn_presentation",
    "exponent_matrix",
    "smith_diagonal",
    "abelianization",
    "tietze_simplify",
    "render",
    "render_word",
]

Word = tuple[int, ...]


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def cyclic_reduce(word: Iterable[int]) -> Word:
    w = free_reduce(word)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i : j + 1]


def invert(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relators: tuple[Word, ...]

    def __post_init__(self):
        if self.generator_count < 0:
            raise ValueError("negative generator count")
        for r in self.relators:
            for letter in r:
                if letter == 0 or abs(letter) > self.generator_count:
                    raise ValueError("letter %d out of range in %r" % (letter, r))

    @property
    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def is_freely_reduced(self) -> bool:
        return all(free_reduce(r) == r for r in self.relators)

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class CrossingRelation:
    """``under_out = over^(sign*exponent) under_in over^(-sign*exponent)``."""

    under_in: int
    under_out: int
    over: int
    sign: int
    exponent: int = 1

    def relator(self) -> Word:
        s = self.over * self.sign
        n = self.exponent
        return (s,) * n + (self.under_in,) + (-s,) * n + (-self.under_out,)


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion %r not in divisibility order" % (self.torsion,))

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z/%d" % t for t in self.torsion)
        return " + ".join(parts) or "0"


def wirtinger_relations(d: Diagram) -> list[CrossingRelation]:
    """One relation per crossing, in crossing order, with exponent 1."""
    if not d.crossings:
        raise EmptyDiagram("diagram has no crossings")
    return [
        CrossingRelation(
            under_in=d.arc_of(c.under_in),
            under_out=d.arc_of(c.under_out),
            over=d.arc_of(c.over_in),
            sign=c.sign,
        )
        for c in d.crossings
    ]


def gn_presentation(d: Diagram, n: int, reduce: bool = True) -> Presentation:
    """The presentation of G_n: one generator per Wirtinger arc (plus one per
    crossing-free circle, last) and one relator per crossing,
    ``over^(s n) in over^(-s n) out^-1``. ``n = 1`` is the knot group."""
    if n < 1:
        raise ValueError("n must be a positive integer, got %r" % (n,))
    relators = []
    if d.crossings:
        for rel in wirtinger_relations(d):
            word = CrossingRelation(
                rel.under_in, rel.under_out, rel.over, rel.sign, n
            ).relator()
            relators.append(free_reduce(word) if reduce else word)
    return Presentation(d.generator_count, tuple(relators))


def exponent_matrix(p: Presentation) -> list[list[int]]:
    rows = []
    for r in p.relators:
        row = [0] * p.generator_count
        for letter in r:
            row[abs(letter) - 1] += 1 if letter > 0 else -1
        rows.append(row)
    return rows


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order.

    Elimination pivots on the entry of least absolute value; Python ints keep
    everything exact.
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        entries = [
            (abs(a[i][j]), i, j)
            for i in range(t, rows)
            for j in range(t, cols)
            if a[i][j]
        ]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // pivot
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // pivot
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = next(
                    (
                        i
                        for i in range(t + 1, rows)
                        if any(a[i][j] % pivot for j in range(t + 1, cols))
                    ),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            _, pi, pj = min(
                [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
                + [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            )
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def abelianization(p: Presentation) -> AbelianInvariants:
    diag = smith_diagonal(exponent_matrix(p))
    return AbelianInvariants(
        free_rank=p.generator_count - len(diag),
        torsion=tuple(x for x in diag if x > 1),
    )


def _substitute(word: Word, gen: int, value: Word) -> Word:
    out: list[int] = []
    inv = invert(value)
    for letter in word:
        if letter == gen:
            out.extend(value)
        elif letter == -gen:
            out.extend(inv)
        else:
            out.append(letter)
    return free_reduce(out)


def _renumber(relators: Iterable[Word], removed: int) -> list[Word]:
    def shift(x):
        a = abs(x)
        a = a - 1 if a > removed else a
        return a if x > 0 else -a

    return [tuple(shift(x) for x in r) for r in relators]


def _clean(relators: Iterable[Word]) -> list[Word]:
    out = []
    for r in relators:
        r = cyclic_reduce(r)
        if r and r not in out:
            out.append(r)
    return out


def tietze_simplify(p: Presentation) -> Presentation:
    """Conservative simplification: cyclic reduction, dropping empty and
    repeated relators, and eliminating a generator that occurs exactly once
    in some relator whenever that does not grow the total length."""
    gens = p.generator_count
    relators = _clean(p.relators)
    changed = True
    while changed:
        changed = False
        total = sum(map(len, relators))
        for ri, r in enumerate(relators):
            counts = Counter(abs(x) for x in r)
            for pos, letter in enumerate(r):
                g = abs(letter)
                if counts[g] != 1:
                    continue
                # r = u g^e v  =>  g^e = u^-1 v^-1
                rest = r[pos + 1 :] + r[:pos]
                value = invert(rest) if letter > 0 else rest
                others = [_substitute(s, g, value) for k, s in enumerate(relators) if k != ri]
                others = _clean(others)
                if sum(map(len, others)) <= total:
                    relators = _renumber(others, g)
                    gens -= 1
                    changed = True
                    break
            if changed:
                break
    return Presentation(gens, tuple(relators))


def render_word(word: Sequence[int]) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        count = j - i
        exp = count if word[i] > 0 else -count
        parts.append("x%d" % abs(word[i]) + ("" if exp == 1 else "^%d" % exp))
        i = j
    return " ".join(parts)


def render(p: Presentation) -> str:
    gens = ", ".join("x%d" % i for i in range(1, p.generator_count + 1))
    rels = ", ".join(render_word(r) for r in p.relators)
    return " ".join(x for x in ("<", gens, "|", rels, ">") if x)
