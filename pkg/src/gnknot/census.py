"""Exact homomorphism counts Hom(G_n(K), H) for finite H.

``count_homs`` assigns elements of H to Wirtinger arcs by backtracking. At a
crossing ``out = a^(s n) in a^(-s n)`` with ``a`` the over-arc image, so
knowing ``a`` and either end forces the other. Which arcs get forced depends
only on which arcs are known, never on their values, so the search order is
planned once per (diagram, n) and then replayed for every branch.

``count_homs_naive`` is the independent reference: it enumerates every
generator tuple and evaluates the relator words.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .diagram import Diagram, diagram_id
from .errors import CensusError, CensusTimeout, OrderCapExceeded, SearchSpaceTooLarge
from .finite_groups import DEFAULT_ORDER_CAP, FiniteGroup, named
from .presentation import Presentation, wirtinger_relations

__all__ = [
    "DEFAULT_TIMEOUT",
    "DEFAULT_PANEL",
    "NAIVE_LIMIT",
    "Fingerprint",
    "Verdict",
    "search_plan",
    "count_homs",
    "count_homs_fixed",
    "count_homs_naive",
    "naive_solutions",
    "default_panel",
    "fingerprint",
    "distinguish",
]

DEFAULT_TIMEOUT = 300.0
NAIVE_LIMIT = 10**8
DEFAULT_PANEL = (
    "Z2", "Z3", "Z4", "Z5", "S3", "D4", "Q8", "A4", "S4", "D5", "D6", "A5", "S5",
)  # fmt: skip

_FORWARD, _BACKWARD, _CHECK = 0, 1, 2
_TIME_CHECK_EVERY = 4096


def default_panel() -> list[FiniteGroup]:
    return [named(tok) for tok in DEFAULT_PANEL]


def search_plan(d: Diagram) -> list[tuple[int, list[tuple[int, int]]]]:
    """Branch arcs and, after each, the crossings to evaluate in order.

    Each level is ``(arc, [(kind, crossing index)])`` with 0-based arcs; kind
    is forward (out from in), backward (in from out) or a consistency check.
    The first level always branches on arc 0.
    """
    rels = wirtinger_relations(d)
    n_arcs = len(d.wirtinger_arcs())
    triples = [(r.under_in - 1, r.under_out - 1, r.over - 1) for r in rels]
    known = [False] * n_arcs
    done = [False] * len(triples)

    def propagate():
        ops = []
        queue_dirty = True
        while queue_dirty:
            queue_dirty = False
            for ci, (i, o, a) in enumerate(triples):
                if done[ci] or not known[a]:
                    continue
                if known[i] and known[o]:
                    ops.append((_CHECK, ci))
                elif known[i]:
                    known[o] = True
                    ops.append((_FORWARD, ci))
                    queue_dirty = True
                elif known[o]:
                    known[i] = True
                    ops.append((_BACKWARD, ci))
                    queue_dirty = True
                else:
                    continue
                done[ci] = True
        return ops

    def gain(arc):
        # crossings that could propagate once ``arc`` is known
        def k(x):
            return known[x] or x == arc

        return sum(
            1
            for ci, (i, o, a) in enumerate(triples)
            if not done[ci] and k(a) and k(i) != k(o)
        )

    levels = []
    first = True
    while not all(known):
        if first:
            arc = 0
            first = False
        else:
            unknown = [x for x in range(n_arcs) if not known[x]]
            arc = max(unknown, key=lambda x: (gain(x), -x))
        known[arc] = True
        levels.append((arc, propagate()))
    return levels


def count_homs(
    d: Diagram,
    n: int,
    h: FiniteGroup,
    timeout: Optional[float] = DEFAULT_TIMEOUT,
    cap: int = DEFAULT_ORDER_CAP,
    class_pruning: bool = True,
) -> int:
    """Exact |Hom(G_n(d), h)|.

    The first arc only ranges over conjugacy-class representatives, each
    completed assignment weighted by the class size. Raises CensusTimeout
    once ``timeout`` seconds of wall clock are spent (``None`` disables it).
    """
    if class_pruning:
        first = [(c[0], len(c)) for c in h.classes]
    else:
        first = [(v, 1) for v in range(h.order)]
    return _count(d, n, h, first, timeout, cap)


def count_homs_fixed(
    d: Diagram,
    n: int,
    h: FiniteGroup,
    element: int,
    timeout: Optional[float] = DEFAULT_TIMEOUT,
    cap: int = DEFAULT_ORDER_CAP,
) -> int:
    """Homomorphisms sending generator ``x_1`` (the first arc) to ``element``."""
    if not d.crossings and not d.unknot_components:
        raise ValueError("empty diagram")
    if not d.crossings:
        return h.order ** (d.unknot_components - 1)
    return _count(d, n, h, [(element, 1)], timeout, cap)


def _count(d, n, h, first, timeout, cap):
    if n < 1:
        raise ValueError("n must be a positive integer, got %r" % (n,))
    if h.order > cap:
        raise OrderCapExceeded("group order %d exceeds cap %d" % (h.order, cap))
    free = h.order ** d.unknot_components
    if not d.crossings:
        return free

    rels = wirtinger_relations(d)
    tables = {}
    for s in (1, -1):
        if any(r.sign == s for r in rels):
            tables[s] = h.conjugation_table(s * n).tolist()
            tables[-s] = h.conjugation_table(-s * n).tolist()
    ops_by_crossing = []
    for r in rels:
        ops_by_crossing.append(
            (tables[r.sign], tables[-r.sign], r.under_in - 1, r.under_out - 1, r.over - 1)
        )

    plan = []
    for arc, ops in search_plan(d):
        steps = []
        for kind, ci in ops:
            fwd, bwd, i, o, a = ops_by_crossing[ci]
            steps.append((kind, fwd if kind != _BACKWARD else bwd, i, o, a))
        plan.append((arc, steps))

    img = [0] * len(d.wirtinger_arcs())
    order = h.order
    deadline = None if timeout is None else time.monotonic() + timeout
    ticks = [0]
    depth = len(plan)
    full = [(v, 1) for v in range(order)]

    def run(level):
        arc, steps = plan[level]
        last = level == depth - 1
        choices = first if level == 0 else full
        total = 0
        for value, weight in choices:
            if deadline is not None:
                ticks[0] += 1
                if ticks[0] % _TIME_CHECK_EVERY == 0 and time.monotonic() > deadline:
                    raise CensusTimeout("count exceeded %.1f s" % timeout)
            img[arc] = value
            ok = True
            for kind, tbl, i, o, a in steps:
                if kind == _FORWARD:
                    img[o] = tbl[img[a]][img[i]]
                elif kind == _BACKWARD:
                    img[i] = tbl[img[a]][img[o]]
                elif tbl[img[a]][img[i]] != img[o]:
                    ok = False
                    break
            if ok:
                total += weight if last else weight * run(level + 1)
        return total

    return free * run(0)


def _digits(idx: np.ndarray, base: int, k: int) -> list[np.ndarray]:
    out = []
    rem = idx
    for _ in range(k):
        out.append(rem % base)
        rem = rem // base
    return out[::-1]


def naive_solutions(
    p: Presentation, h: FiniteGroup, limit: int = NAIVE_LIMIT, chunk: int = 1 << 20
) -> Iterator[np.ndarray]:
    """Yield arrays (rows = generator images) of tuples satisfying every relator."""
    k = p.generator_count
    total = h.order**k
    if total > limit:
        raise SearchSpaceTooLarge(
            "%d^%d = %d tuples exceeds limit %d" % (h.order, k, total, limit)
        )
    table, inv, e = h.table, h.inverses, h.identity
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        imgs = _digits(idx, h.order, k)
        ok = np.ones(len(idx), dtype=bool)
        for r in p.relators:
            cur = np.full(len(idx), e, dtype=np.int64)
            for letter in r:
                g = imgs[abs(letter) - 1]
                cur = table[cur, g if letter > 0 else inv[g]]
            ok &= cur == e
        if k:
            yield np.stack([g[ok] for g in imgs], axis=1)
        else:
            yield np.zeros((int(ok.sum()), 0), dtype=np.int64)


def count_homs_naive(p: Presentation, h: FiniteGroup, limit: int = NAIVE_LIMIT) -> int:
    """Brute-force |Hom(<gens | relators>, h)| over all generator tuples."""
    return sum(len(block) for block in naive_solutions(p, h, limit))


@dataclass
class Fingerprint:
    diagram_id: str
    entries: dict[tuple[str, int], int] = field(default_factory=dict)
    absent: dict[tuple[str, int], str] = field(default_factory=dict)
    keys: list[tuple[str, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "diagram_id": self.diagram_id,
            "entries": [
                {"group": g, "n": n, "count": self.entries[(g, n)]}
                for g, n in self.keys
                if (g, n) in self.entries
            ],
            "absent": [
                {"group": g, "n": n, "reason": self.absent[(g, n)]}
                for g, n in self.keys
                if (g, n) in self.absent
            ],
        }

    def same_entries(self, other: "Fingerprint") -> bool:
        return self.entries == other.entries and not self.absent and not other.absent


def fingerprint(
    d: Diagram,
    panel: Sequence[FiniteGroup],
    ns: Iterable[int],
    cache=None,
    timeout: Optional[float] = DEFAULT_TIMEOUT,
) -> Fingerprint:
    """Counts for every (group, n), in panel order then increasing n.

    ``cache`` is anything with ``get(diagram_id, group, n)`` and
    ``put(diagram_id, group, n, count)``. Failed entries land in ``absent``.
    """
    did = diagram_id(d)
    fp = Fingerprint(did)
    ns = sorted(set(ns))
    for h in panel:
        for n in ns:
            key = (h.name, n)
            fp.keys.append(key)
            count = cache.get(did, h, n) if cache is not None else None
            if count is None:
                try:
                    count = count_homs(d, n, h, timeout=timeout)
                except CensusError as exc:
                    fp.absent[key] = exc.reason
                    continue
                except OrderCapExceeded as exc:
                    fp.absent[key] = exc.reason
                    continue
                if cache is not None:
                    cache.put(did, h, n, count)
            fp.entries[key] = count
    return fp


@dataclass
class Verdict:
    distinguished: bool
    witness: Optional[tuple[str, int, int, int]] = None
    skipped: list[tuple[str, int, str]] = field(default_factory=list)

    def __str__(self) -> str:
        if self.distinguished:
            g, n, ca, cb = self.witness
            return "distinguished by %s at n=%d: %d vs %d" % (g, n, ca, cb)
        return "not distinguished over panel"

    def to_json(self) -> dict:
        out = {"distinguished": self.distinguished, "witness": None}
        if self.witness:
            g, n, ca, cb = self.witness
            out["witness"] = {"group": g, "n": n, "count_a": ca, "count_b": cb}
        out["skipped"] = [{"group": g, "n": n, "reason": r} for g, n, r in self.skipped]
        return out


def distinguish(
    a: Diagram,
    b: Diagram,
    panel: Sequence[FiniteGroup],
    ns: Iterable[int],
    cache=None,
    timeout: Optional[float] = DEFAULT_TIMEOUT,
) -> Verdict:
    """First (group, n) where the counts differ, scanning panel order then n.

    Stops at the first witness; entries missing on either side are skipped.
    """
    ns = sorted(set(ns))
    skipped = []
    for h in panel:
        for n in ns:
            counts = []
            for d in (a, b):
                fp = fingerprint(d, [h], [n], cache=cache, timeout=timeout)
                counts.append(fp.entries.get((h.name, n), fp.absent.get((h.name, n))))
            ca, cb = counts
            if isinstance(ca, str) or isinstance(cb, str):
                reason = ca if isinstance(ca, str) else cb
                skipped.append((h.name, n, reason))
                continue
            if ca != cb:
                return Verdict(True, (h.name, n, ca, cb), skipped)
    return Verdict(False, None, skipped)
