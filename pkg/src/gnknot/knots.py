"""Built-in knot table and parsing of ``<knot>`` arguments."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .diagram import (
    Diagram,
    braid_closure,
    connect_sum,
    mirror,
    parse_braid,
    parse_pd,
)
from .errors import UnknownKnot

__all__ = ["KnotEntry", "builtin_table", "ALIASES", "lookup", "resolve_knot"]

# Knot Atlas PD codes.
TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE8_PD = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
CINQUEFOIL_PD = "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]"
THREE_TWIST_PD = "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]"
HOPF_PD = "X[1,3,2,4] X[3,1,4,2]"


@dataclass(frozen=True)
class KnotEntry:
    name: str
    diagram: Diagram
    notes: str


ALIASES = {
    "0_1": "unknot",
    "3_1": "trefoil",
    "4_1": "figure-8",
    "figure-eight": "figure-8",
    "5_1": "cinquefoil",
    "hopf-link": "hopf",
    "L2a1": "hopf",
}


@lru_cache(maxsize=None)
def builtin_table() -> tuple[KnotEntry, ...]:
    trefoil = parse_pd(TREFOIL_PD)
    mirror_trefoil = mirror(trefoil)
    return (
        KnotEntry("unknot", parse_pd("U"), "crossing-free circle"),
        KnotEntry("kinked-unknot", parse_pd("X[1,1,2,2]"), "one-crossing kink"),
        KnotEntry("trefoil", trefoil, "3_1, Knot Atlas PD (negative crossings)"),
        KnotEntry("mirror-trefoil", mirror_trefoil, "mirror of trefoil"),
        KnotEntry("figure-8", parse_pd(FIGURE8_PD), "4_1, Knot Atlas PD"),
        KnotEntry("cinquefoil", parse_pd(CINQUEFOIL_PD), "5_1, Knot Atlas PD"),
        KnotEntry("5_2", parse_pd(THREE_TWIST_PD), "5_2, Knot Atlas PD"),
        KnotEntry("granny", connect_sum(trefoil, trefoil), "trefoil # trefoil"),
        KnotEntry(
            "square", connect_sum(trefoil, mirror_trefoil), "trefoil # mirror-trefoil"
        ),
        KnotEntry("hopf", parse_pd(HOPF_PD), "Hopf link, 2 components"),
        KnotEntry(
            "trefoil-braid",
            braid_closure(parse_braid("braid(2): 1 1 1")),
            "closure of braid(2): 1 1 1",
        ),
    )


def lookup(name: str) -> KnotEntry:
    name = ALIASES.get(name, name)
    for entry in builtin_table():
        if entry.name == name:
            return entry
    raise UnknownKnot("no built-in knot named %r" % name)


def _parse_text(text: str) -> Diagram:
    if text.lstrip().startswith("braid"):
        return braid_closure(parse_braid(text))
    return parse_pd(text)


def resolve_knot(arg: str) -> Diagram:
    """A built-in name, ``pd:<code>``, ``braid(s): ...`` or ``@file``."""
    arg = arg.strip()
    if arg.startswith("pd:"):
        return parse_pd(arg[3:])
    if arg.startswith("braid"):
        return braid_closure(parse_braid(arg))
    if arg.startswith("@"):
        path = Path(arg[1:])
        try:
            text = path.read_text()
        except OSError as exc:
            raise UnknownKnot("cannot read %s: %s" % (path, exc)) from exc
        return _parse_text(text)
    return lookup(arg).diagram
