"""Generalized knot groups G_n(K) and exact finite-quotient fingerprints."""

__version__ = "0.1.0"

from .diagram import (
    BraidWord,
    Crossing,
    Diagram,
    braid_closure,
    connect_sum,
    diagram_id,
    mirror,
    parse_braid,
    parse_pd,
    reverse,
)
from .presentation import (
    AbelianInvariants,
    CrossingRelation,
    Presentation,
    abelianization,
    gn_presentation,
    render,
    tietze_simplify,
    wirtinger_relations,
)
from .finite_groups import FiniteGroup, from_permutations, named, power
from .census import (
    Fingerprint,
    Verdict,
    count_homs,
    count_homs_naive,
    default_panel,
    distinguish,
    fingerprint,
)
