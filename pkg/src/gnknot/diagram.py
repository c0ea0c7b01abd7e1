"""Knot and link diagrams in PD-code and braid-word notation.

PD convention: ``X[a,b,c,d]`` lists the four edge labels at a crossing
counterclockwise, starting at the incoming under-strand. Positions 0 and 2
(``a``, ``c``) are the under-strand (in, out); positions 1 and 3 are the
over-strand. A crossing is positive when the over-strand enters at position
3 and leaves at position 1 (the knot-atlas rule ``d -> b``).

The labels of a PD code are edges of the diagram graph (segments between
consecutive crossings). ``Diagram.arc_count`` counts those labels. The
Wirtinger arcs, which run from one undercrossing to the next and carry the
group generators, are reported by :meth:`Diagram.wirtinger_arcs`.
"""

from __future__ import annotations

import hashlib
import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (
    ArcMultiplicity,
    DisconnectedArcChain,
    MalformedToken,
    MultiComponentOperand,
    StrandOutOfRange,
)

__all__ = [
    "Crossing",
    "Diagram",
    "BraidWord",
    "parse_pd",
    "parse_braid",
    "braid_closure",
    "mirror",
    "reverse",
    "connect_sum",
    "canonical_form",
    "diagram_id",
    "to_pd",
]

UNDER_IN, UNDER_OUT = 0, 2

# Each position is joined through the crossing to the opposite one.
_THROUGH = (2, 3, 0, 1)

# Beyond this many relabelings the canonical form falls back to the
# normalized labeling alone.
_CANONICAL_LIMIT = 50_000


@dataclass(frozen=True)
class Crossing:
    quadrants: tuple[int, int, int, int]
    sign: int

    @property
    def under_in(self) -> int:
        return self.quadrants[UNDER_IN]

    @property
    def under_out(self) -> int:
        return self.quadrants[UNDER_OUT]

    @property
    def over_in_position(self) -> int:
        return 3 if self.sign > 0 else 1

    @property
    def over_in(self) -> int:
        return self.quadrants[self.over_in_position]

    @property
    def over_out(self) -> int:
        return self.quadrants[4 - self.over_in_position]

    def __str__(self) -> str:
        return "X[%d,%d,%d,%d]" % self.quadrants


@dataclass(frozen=True)
class Diagram:
    """A validated, normalized diagram.

    Edge labels are ``1..arc_count``, numbered consecutively along each
    oriented component; ``components`` lists the labels of each component
    in traversal order. Crossing-free circles are only counted.
    """

    crossings: tuple[Crossing, ...]
    arc_count: int
    components: tuple[tuple[int, ...], ...]
    unknot_components: int = 0

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def component_count(self) -> int:
        return len(self.components) + self.unknot_components

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(c.sign for c in self.crossings)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @cached_property
    def heads(self) -> dict[int, tuple[int, int]]:
        """Map each edge label to the (crossing, position) slot it runs into."""
        out = {}
        for ci, c in enumerate(self.crossings):
            out[c.under_in] = (ci, UNDER_IN)
            out[c.over_in] = (ci, c.over_in_position)
        return out

    @cached_property
    def _arc_data(self) -> tuple[dict[int, int], tuple[tuple[int, ...], ...]]:
        arc_of = {}
        arcs = []
        for comp in self.components:
            m = len(comp)
            # an arc starts right after an undercrossing
            starts = [
                i for i in range(m) if self.heads[comp[i - 1]][1] == UNDER_IN
            ]
            if not starts:
                arcs.append(tuple(comp))
                continue
            first = starts[0]
            current = []
            for step in range(m):
                label = comp[(first + step) % m]
                current.append(label)
                if self.heads[label][1] == UNDER_IN:
                    arcs.append(tuple(current))
                    current = []
        for index, arc in enumerate(arcs, start=1):
            for label in arc:
                arc_of[label] = index
        return arc_of, tuple(arcs)

    def wirtinger_arcs(self) -> tuple[tuple[int, ...], ...]:
        """Wirtinger arcs as tuples of edge labels; arc ``i`` is generator ``x_i``."""
        return self._arc_data[1]

    def arc_of(self, label: int) -> int:
        """1-based Wirtinger arc index carrying edge ``label``."""
        return self._arc_data[0][label]

    @property
    def generator_count(self) -> int:
        return len(self._arc_data[1]) + self.unknot_components

    def component_of(self, label: int) -> int:
        for i, comp in enumerate(self.components):
            if label in comp:
                return i
        raise KeyError(label)

    def __str__(self) -> str:
        return to_pd(self)


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strand_count < 1:
            raise StrandOutOfRange("strand count must be positive")
        for letter in self.letters:
            if not 1 <= abs(letter) < self.strand_count:
                raise StrandOutOfRange(
                    "letter %d out of range for %d strands"
                    % (letter, self.strand_count)
                )

    def __str__(self) -> str:
        return "braid(%d): %s" % (
            self.strand_count,
            " ".join(str(x) for x in self.letters),
        )


def _build(
    quads: Sequence[Sequence[int]],
    unknots: int = 0,
    over_dirs: Optional[Sequence[int]] = None,
) -> Diagram:
    """Validate raw quadrant data, orient components and normalize labels.

    ``over_dirs`` optionally gives, per crossing, +1 if the over-strand
    enters at position 3 and -1 if at position 1. It only matters for
    components that never pass under anything, whose orientation cannot be
    read off the under-strands.
    """
    quads = [tuple(q) for q in quads]
    if not quads:
        if unknots < 1:
            raise MalformedToken("diagram has no crossings and no components")
        return Diagram((), 0, (), unknots)

    slots: dict[int, list[tuple[int, int]]] = {}
    for ci, q in enumerate(quads):
        if len(q) != 4:
            raise MalformedToken("crossing %d does not have 4 labels" % ci)
        for pos, label in enumerate(q):
            slots.setdefault(label, []).append((ci, pos))
    bad = sorted(lab for lab, s in slots.items() if len(s) != 2)
    if bad:
        raise ArcMultiplicity(
            "labels not appearing exactly twice: %s" % ", ".join(map(str, bad))
        )

    def other(label, slot):
        a, b = slots[label]
        return b if slot == a else a

    # Walk strands: (label, tail slot, head slot) cycles.
    seen = set()
    cycles = []
    for start in sorted(slots):
        if start in seen:
            continue
        cycle = []
        label, tail = start, slots[start][0]
        while label not in seen:
            seen.add(label)
            head = other(label, tail)
            cycle.append((label, tail, head))
            ci, pos = head
            tail = (ci, _THROUGH[pos])
            label = quads[ci][tail[1]]
        if (label, tail) != (cycle[0][0], cycle[0][1]):
            raise DisconnectedArcChain("strand through label %d does not close" % start)
        cycles.append(cycle)

    oriented = []
    for cycle in cycles:
        forward = any(h[1] == UNDER_IN for _, _, h in cycle)
        backward = any(h[1] == UNDER_OUT for _, _, h in cycle)
        if forward and backward:
            raise DisconnectedArcChain(
                "component through label %d runs both ways along under-strands"
                % cycle[0][0]
            )
        if not forward and not backward and over_dirs is not None:
            _, _, (ci, pos) = cycle[0]
            backward = (3 if over_dirs[ci] > 0 else 1) != pos
        if backward:
            cycle = [(lab, h, t) for lab, t, h in reversed(cycle)]
        oriented.append(cycle)

    # Components ordered by smallest original label; each starts there.
    relabel = {}
    components = []
    for cycle in sorted(oriented, key=lambda cyc: min(x[0] for x in cyc)):
        k = min(range(len(cycle)), key=lambda i: cycle[i][0])
        cycle = cycle[k:] + cycle[:k]
        comp = []
        for label, _, _ in cycle:
            relabel[label] = len(relabel) + 1
            comp.append(relabel[label])
        components.append(tuple(comp))

    over_heads = {}
    for cycle in oriented:
        for _, _, (ci, pos) in cycle:
            if pos in (1, 3):
                over_heads[ci] = pos
    crossings = []
    for ci, q in enumerate(quads):
        sign = 1 if over_heads[ci] == 3 else -1
        crossings.append(Crossing(tuple(relabel[x] for x in q), sign))
    return Diagram(tuple(crossings), len(relabel), tuple(components), unknots)


_PD_TOKEN = re.compile(r"X\[([^\[\]]*)\]|U\b|[^\s,]+")
_PD_WRAPPER = re.compile(r"^\s*PD\s*\[(.*)\]\s*$", re.S)


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def parse_pd(text: str) -> Diagram:
    """Parse ``X[a,b,c,d]`` tokens (and ``U`` for free circles) into a Diagram.

    >>> parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").component_count
    1
    """
    body = _strip_comments(text)
    wrapped = _PD_WRAPPER.match(body)
    if wrapped:
        body = wrapped.group(1)
    quads = []
    unknots = 0
    for m in _PD_TOKEN.finditer(body):
        token = m.group(0)
        if token == "U":
            unknots += 1
            continue
        if m.group(1) is None:
            raise MalformedToken("unparseable token %r" % token)
        parts = [p for p in re.split(r"[\s,]+", m.group(1).strip()) if p]
        if len(parts) != 4 or not all(p.isdigit() for p in parts):
            raise MalformedToken("unparseable token %r" % token)
        labels = [int(p) for p in parts]
        if 0 in labels:
            raise MalformedToken("labels must be positive in %r" % token)
        quads.append(labels)
    if not quads and not unknots:
        raise MalformedToken("no crossings or unknot tokens found")
    return _build(quads, unknots)


_BRAID = re.compile(r"^\s*braid\s*\(\s*(\d+)\s*\)\s*:(.*)$", re.S)


def parse_braid(text: str) -> BraidWord:
    m = _BRAID.match(_strip_comments(text))
    if not m:
        raise MalformedToken("expected 'braid(s): w', got %r" % text.strip())
    letters = []
    for token in re.split(r"[\s,]+", m.group(2).strip()):
        if not token:
            continue
        if not re.fullmatch(r"[+-]?\d+", token):
            raise MalformedToken("unparseable braid letter %r" % token)
        letters.append(int(token))
    return BraidWord(int(m.group(1)), tuple(letters))


def braid_closure(b: BraidWord) -> Diagram:
    """Close a braid: strands run upward, ``k`` is a positive crossing of
    strands ``k`` and ``k+1`` with the left strand passing over."""
    s = b.strand_count
    current = list(range(1, s + 1))
    fresh = itertools.count(s + 1)
    quads = []
    signs = []
    touched = set()
    for letter in b.letters:
        k = abs(letter) - 1
        touched.update((k, k + 1))
        left, right = current[k], current[k + 1]
        new_left, new_right = next(fresh), next(fresh)
        if letter > 0:
            # under: right -> left; over: left -> right
            quads.append([right, new_right, new_left, left])
        else:
            # under: left -> right; over: right -> left
            quads.append([left, right, new_right, new_left])
        signs.append(1 if letter > 0 else -1)
        current[k], current[k + 1] = new_left, new_right
    close = {current[p]: p + 1 for p in range(s) if p in touched}
    quads = [[close.get(x, x) for x in q] for q in quads]
    return _build(quads, s - len(touched), signs)


def mirror(d: Diagram) -> Diagram:
    """Swap over and under at every crossing, orientation kept."""
    quads = []
    for c in d.crossings:
        a, b, cc, dd = c.quadrants
        # new under-strand is the old over-strand, listed from its entry
        quads.append([dd, a, b, cc] if c.sign > 0 else [b, cc, dd, a])
    return _build(quads, d.unknot_components, [-s for s in d.signs])


def reverse(d: Diagram) -> Diagram:
    """Reverse the orientation of every component."""
    quads = [[c_, d_, a, b] for a, b, c_, d_ in (c.quadrants for c in d.crossings)]
    return _build(quads, d.unknot_components, d.signs)


def connect_sum(
    a: Diagram,
    b: Diagram,
    arc_a: int = 1,
    arc_b: int = 1,
    reverse_b: bool = False,
) -> Diagram:
    """Splice two knot diagrams along edge ``arc_a`` of ``a`` and ``arc_b`` of ``b``.

    The edges are cut and rejoined head-to-tail, so orientations always
    agree; ``reverse_b`` splices the reversed ``b`` instead.
    """
    for name, d in (("first", a), ("second", b)):
        if d.component_count != 1:
            raise MultiComponentOperand(
                "%s operand has %d components" % (name, d.component_count)
            )
    if reverse_b:
        b = reverse(b)
    if not b.crossings:
        return a
    if not a.crossings:
        return b
    for name, d, arc in (("first", a, arc_a), ("second", b, arc_b)):
        if not 1 <= arc <= d.arc_count:
            raise ValueError("%s operand has no arc %d" % (name, arc))
    offset = a.arc_count
    qa = [list(c.quadrants) for c in a.crossings]
    qb = [[x + offset for x in c.quadrants] for c in b.crossings]
    beta = arc_b + offset
    ca, pa = a.heads[arc_a]
    cb, pb = b.heads[arc_b]
    qa[ca][pa] = beta
    qb[cb][pb] = arc_a
    return _build(qa + qb, 0, a.signs + b.signs)


def _relabeled_key(d: Diagram, order: Iterable[tuple[int, ...]]):
    relabel = {}
    for comp in order:
        for label in comp:
            relabel[label] = len(relabel) + 1
    return tuple(
        sorted((tuple(relabel[x] for x in c.quadrants), c.sign) for c in d.crossings)
    )


def canonical_form(d: Diagram) -> tuple:
    """Relabeling-invariant key: the lexicographically smallest sorted crossing
    list over all consecutive relabelings (component order and start edge)."""
    comps = d.components
    total = 1
    for comp in comps:
        total *= len(comp)
    for k in range(2, len(comps) + 1):
        total *= k
    if total > _CANONICAL_LIMIT:
        best = _relabeled_key(d, comps)
    else:
        best = None
        for perm in itertools.permutations(comps):
            for starts in itertools.product(*(range(len(c)) for c in perm)):
                order = [c[s:] + c[:s] for c, s in zip(perm, starts)]
                key = _relabeled_key(d, order)
                if best is None or key < best:
                    best = key
    return (d.unknot_components, best or ())


def diagram_id(d: Diagram) -> str:
    digest = hashlib.sha256(repr(canonical_form(d)).encode()).hexdigest()
    return digest[:16]


def to_pd(d: Diagram) -> str:
    parts = [str(c) for c in d.crossings] + ["U"] * d.unknot_components
    return " ".join(parts)
