"""Finite groups as dense Cayley tables.

Elements are indices ``0..order-1``; ``table[a, b]`` is the product ``a*b``.
Groups built from permutations put the identity at index 0 and compose
right-to-left, ``(a*b)(x) = a(b(x))``.
"""

from __future__ import annotations

import hashlib
import re
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .errors import (
    GroupFileError,
    NotAGroup,
    NotAPermutation,
    OrderCapExceeded,
    UnknownGroupToken,
)

__all__ = [
    "DEFAULT_ORDER_CAP",
    "FiniteGroup",
    "from_permutations",
    "from_table",
    "perm_from_cycles",
    "named",
    "power",
    "load_group_file",
    "write_group_file",
    "check_axioms",
]

DEFAULT_ORDER_CAP = 720

# exhaustive associativity check up to this order, sampling above
EXHAUSTIVE_ASSOC_ORDER = 256
ASSOC_SAMPLES = 100_000


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    name: str
    table: np.ndarray
    identity: int
    inverses: np.ndarray
    classes: tuple[tuple[int, ...], ...]
    _powers: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    @property
    def class_representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    def class_of(self, e: int) -> tuple[int, ...]:
        for c in self.classes:
            if e in c:
                return c
        raise IndexError(e)

    @property
    def digest(self) -> str:
        """Hash of the Cayley table; distinguishes same-named custom groups."""
        data = np.ascontiguousarray(self.table, dtype=np.int64).tobytes()
        return hashlib.sha256(data).hexdigest()[:16]

    def powers(self, k: int) -> np.ndarray:
        """``e**k`` for every element, cached per exponent."""
        if k not in self._powers:
            self._powers[k] = np.array(
                [power(self, e, k) for e in range(self.order)], dtype=np.int64
            )
        return self._powers[k]

    def conjugation_table(self, k: int) -> np.ndarray:
        """``C[a, x] = a**k * x * a**-k``."""
        pk = self.powers(k)
        left = self.table[pk]  # left[a, x] = a^k x
        return self.table[left, self.inverses[pk][:, None]]

    def __repr__(self) -> str:
        return "FiniteGroup(%s, order=%d)" % (self.name, self.order)


def _conjugacy_classes(table: np.ndarray, inverses: np.ndarray) -> tuple[tuple[int, ...], ...]:
    order = table.shape[0]
    # conj[g, x] = g x g^-1
    conj = table[table, inverses[:, None]]
    seen = np.zeros(order, dtype=bool)
    classes = []
    for x in range(order):
        if seen[x]:
            continue
        cls = np.unique(conj[:, x])
        seen[cls] = True
        classes.append(tuple(int(c) for c in cls))
    return tuple(classes)


def check_axioms(
    table: np.ndarray, rng: Optional[np.random.Generator] = None
) -> tuple[int, np.ndarray]:
    """Verify the group law; return ``(identity, inverses)`` or raise NotAGroup."""
    table = np.asarray(table)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise NotAGroup("table must be a nonempty square array")
    order = table.shape[0]
    if table.min() < 0 or table.max() >= order:
        raise NotAGroup("table entries out of range")
    ar = np.arange(order)
    ids = [e for e in range(order) if (table[e] == ar).all() and (table[:, e] == ar).all()]
    if not ids:
        raise NotAGroup("no two-sided identity")
    identity = ids[0]
    inverses = np.full(order, -1, dtype=np.int64)
    for a in range(order):
        hits = np.flatnonzero(table[a] == identity)
        if len(hits) != 1 or table[hits[0], a] != identity:
            raise NotAGroup("element %d has no two-sided inverse" % a)
        inverses[a] = hits[0]
    if order <= EXHAUSTIVE_ASSOC_ORDER:
        ok = (table[table] == table[:, table]).all()
    else:
        rng = rng or np.random.default_rng(0)
        a, b, c = rng.integers(0, order, size=(3, ASSOC_SAMPLES))
        ok = (table[table[a, b], c] == table[a, table[b, c]]).all()
    if not ok:
        raise NotAGroup("table is not associative")
    return identity, inverses


def from_table(table, name: str = "G", cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    table = np.asarray(table, dtype=np.int64)
    if table.ndim == 2 and table.shape[0] > cap:
        raise OrderCapExceeded("order %d exceeds cap %d" % (table.shape[0], cap))
    identity, inverses = check_axioms(table)
    table.setflags(write=False)
    inverses.setflags(write=False)
    return FiniteGroup(name, table, identity, inverses, _conjugacy_classes(table, inverses))


def _as_perm(degree: int, images: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(int(x) - 1 for x in images)
    if len(perm) != degree or sorted(perm) != list(range(degree)):
        raise NotAPermutation("%r is not a permutation of 1..%d" % (list(images), degree))
    return perm


def perm_from_cycles(degree: int, cycles: Sequence[Sequence[int]] | str) -> list[int]:
    """One-line images (1-based) of a permutation given in cycle notation,
    either as nested sequences or a string like ``"(1 2)(3 4 5)"``."""
    if isinstance(cycles, str):
        cycles = [
            [int(x) for x in re.split(r"[\s,]+", body.strip()) if x]
            for body in re.findall(r"\(([^()]*)\)", cycles)
        ]
    images = list(range(1, degree + 1))
    touched = set()
    for cyc in cycles:
        for i, x in enumerate(cyc):
            if not 1 <= x <= degree or x in touched:
                raise NotAPermutation("bad cycle entry %r" % (x,))
            touched.add(x)
            images[x - 1] = cyc[(i + 1) % len(cyc)]
    return images


def from_permutations(
    degree: int,
    gens: Sequence[Sequence[int]],
    name: Optional[str] = None,
    cap: int = DEFAULT_ORDER_CAP,
) -> FiniteGroup:
    """Close the generators (one-line image lists on 1..degree) under products."""
    if degree < 1:
        raise NotAPermutation("degree must be positive")
    perms = [_as_perm(degree, g) for g in gens]
    identity = tuple(range(degree))
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in perms:
            y = tuple(g[x[i]] for i in range(degree))
            if y not in index:
                if len(elements) >= cap:
                    raise OrderCapExceeded("group order exceeds cap %d" % cap)
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    order = len(elements)
    arr = np.array(elements, dtype=np.int64)  # arr[e, i] = e(i)
    table = np.empty((order, order), dtype=np.int64)
    # (a*b)(i) = a(b(i))
    for a in range(order):
        composed = arr[a][arr]
        table[a] = [index[tuple(row)] for row in composed.tolist()]
    return from_table(table, name or "<%d perms on %d>" % (len(perms), degree), cap)


def _cyclic(k):
    return [c % k + 1 for c in range(1, k + 1)]


def _quaternion_table() -> np.ndarray:
    # units (sign, axis) with axis in 1, i, j, k; index = 2*axis + (sign < 0)
    mult = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }  # fmt: skip
    table = np.empty((8, 8), dtype=np.int64)
    for a in range(8):
        for b in range(8):
            s, axis = mult[(a // 2, b // 2)]
            if (a % 2) ^ (b % 2):
                s = -s
            table[a, b] = 2 * axis + (s < 0)
    return table


def _q8_generators() -> list[list[int]]:
    table = _quaternion_table()
    # left multiplication by i and by j, on the 8 units
    return [[int(table[u, x]) + 1 for x in range(8)] for u in (2, 4)]


_NAMED = re.compile(r"^(S|A|D|Z)(\d+)$|^(Q8)$")


def named(token: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """``S2..S6``, ``A3..A6``, ``Dk`` (k >= 3), ``Zk`` (k >= 1) or ``Q8``."""
    m = _NAMED.match(token.strip())
    if not m:
        raise UnknownGroupToken("unknown group token %r" % token)
    if m.group(3):
        return from_permutations(8, _q8_generators(), "Q8", cap)
    family, k = m.group(1), int(m.group(2))
    if family == "S" and 2 <= k <= 6:
        gens = [perm_from_cycles(k, [[1, 2]]), _cyclic(k)]
        return from_permutations(k, gens, token, cap)
    if family == "A" and 3 <= k <= 6:
        gens = [perm_from_cycles(k, [[i, i + 1, i + 2]]) for i in range(1, k - 1)]
        return from_permutations(k, gens, token, cap)
    if family == "D" and k >= 3:
        reflection = [(k - i) % k + 1 for i in range(k)]  # i -> -i mod k
        return from_permutations(k, [_cyclic(k), reflection], token, cap)
    if family == "Z" and k >= 1:
        return from_permutations(k, [_cyclic(k)], token, cap)
    raise UnknownGroupToken("unknown group token %r" % token)


def power(h: FiniteGroup, e: int, n: int) -> int:
    """``e**n`` by square-and-multiply; negative ``n`` uses the inverse."""
    if n < 0:
        e, n = int(h.inverses[e]), -n
    result = h.identity
    base = e
    while n:
        if n & 1:
            result = int(h.table[result, base])
        base = int(h.table[base, base])
        n >>= 1
    return result


def load_group_file(path: str | Path, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Read ``order N``, then N rows of N indices, and an optional ``name ...`` line."""
    path = Path(path)
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise GroupFileError("cannot read %s: %s" % (path, exc)) from exc
    name = path.stem
    order = None
    rows = []
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("name"):
            name = line[4:].strip() or name
        elif line.startswith("order"):
            try:
                order = int(line.split()[1])
            except (IndexError, ValueError):
                raise GroupFileError("bad order line %r" % raw) from None
        else:
            try:
                rows.append([int(x) for x in line.split()])
            except ValueError:
                raise GroupFileError("bad table row %r" % raw) from None
    if order is None:
        raise GroupFileError("%s: missing 'order N' line" % path)
    if order > cap:
        raise OrderCapExceeded("order %d exceeds cap %d" % (order, cap))
    if len(rows) != order or any(len(r) != order for r in rows):
        raise GroupFileError("%s: expected %d rows of %d entries" % (path, order, order))
    try:
        return from_table(rows, name, cap)
    except NotAGroup as exc:
        raise GroupFileError("%s: %s" % (path, exc)) from exc


def write_group_file(h: FiniteGroup, path: str | Path) -> None:
    lines = ["order %d" % h.order]
    lines += [" ".join(str(int(x)) for x in row) for row in h.table]
    lines.append("name %s" % h.name)
    Path(path).write_text("\n".join(lines) + "\n")
