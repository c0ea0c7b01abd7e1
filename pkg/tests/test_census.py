import pytest
from hypothesis import given, settings

from helpers import fox_colorings
from test_diagram import braids
import gnknot.census as census
from gnknot.census import (
    Fingerprint,
    count_homs,
    count_homs_fixed,
    count_homs_naive,
    distinguish,
    fingerprint,
    naive_solutions,
    search_plan,
)
from gnknot.diagram import braid_closure, connect_sum, mirror, parse_pd
from gnknot.errors import CensusTimeout, OrderCapExceeded, SearchSpaceTooLarge
from gnknot.finite_groups import named
from gnknot.presentation import Presentation, gn_presentation

# Frozen after re-deriving with count_homs_naive / Fox colorings (test_frozen_values_rederived).
TREFOIL_S3 = 12
FIGURE8_S3 = 6


def test_frozen_values_rederived(trefoil, figure8, s3):
    assert count_homs_naive(gn_presentation(trefoil, 1), s3) == TREFOIL_S3
    assert count_homs_naive(gn_presentation(figure8, 1), s3) == FIGURE8_S3
    # D3 = S3: p rotation images plus one hom per Fox 3-coloring
    assert 3 + fox_colorings(trefoil, 3) == TREFOIL_S3
    assert 3 + fox_colorings(figure8, 3) == FIGURE8_S3


def test_classical_values(trefoil, figure8, s3):
    assert count_homs(trefoil, 1, s3) == TREFOIL_S3
    assert count_homs(figure8, 1, s3) == FIGURE8_S3


@pytest.mark.parametrize("p", [3, 5, 7])
def test_dihedral_counts_match_fox_colorings(knots, p):
    h = named("D%d" % p)
    for name in ["trefoil", "figure-8", "cinquefoil", "5_2", "granny", "square"]:
        d = knots[name]
        assert count_homs(d, 1, h) == p + fox_colorings(d, p), name


class TestNaive:
    def test_free(self, s3):
        assert count_homs_naive(Presentation(1, ()), s3) == 6

    def test_z2_relator(self, s3):
        assert count_homs_naive(Presentation(1, ((1, 1),)), s3) == 4

    def test_no_generators(self, s3):
        assert count_homs_naive(Presentation(0, ()), s3) == 1

    def test_guard(self):
        with pytest.raises(SearchSpaceTooLarge):
            count_homs_naive(Presentation(5, ()), named("S5"))

    def test_chunking(self, trefoil):
        h = named("D4")
        p = gn_presentation(trefoil, 1)
        small = sum(len(b) for b in naive_solutions(p, h, chunk=7))
        assert small == count_homs_naive(p, h)


class TestCountHoms:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_unknots(self, knots, panel, n):
        for h in panel:
            assert count_homs(knots["unknot"], n, h) == h.order
            assert count_homs(knots["kinked-unknot"], n, h) == h.order

    def test_free_circles_multiply(self, trefoil, s3):
        d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] U U")
        assert count_homs(d, 2, s3) == count_homs(trefoil, 2, s3) * 36
        assert count_homs(parse_pd("U U U"), 1, s3) == 216

    def test_hopf_is_z2(self, panel):
        hopf = parse_pd("X[1,3,2,4] X[3,1,4,2]")
        for h in panel:
            # commuting pairs
            assert count_homs(hopf, 1, h) == h.order * len(h.classes)

    def test_class_pruning_is_sound(self, knots):
        for h in map(named, ["S4", "Q8", "A5"]):
            for d in knots.values():
                for n in (1, 2):
                    assert count_homs(d, n, h) == count_homs(d, n, h, class_pruning=False)

    def test_oracle_small(self, knots):
        for h in map(named, ["Z4", "S3", "D4"]):
            for name in ["trefoil", "figure-8", "hopf", "5_2"]:
                for n in (1, 2):
                    d = knots[name]
                    assert count_homs(d, n, h) == count_homs_naive(gn_presentation(d, n), h)

    @given(braids(max_strands=3, max_len=5))
    @settings(max_examples=60, deadline=None)
    def test_oracle_random_braids(self, b):
        d = braid_closure(b)
        for h in map(named, ["S3", "Z4"]):
            for n in (1, 2):
                assert count_homs(d, n, h) == count_homs_naive(gn_presentation(d, n), h)

    @given(braids(max_strands=4, max_len=6))
    @settings(max_examples=40, deadline=None)
    def test_mirror_random_braids(self, b):
        d = braid_closure(b)
        for h in map(named, ["S3", "A4"]):
            for n in (1, 2):
                assert count_homs(mirror(d), n, h) == count_homs(d, n, h)

    def test_at_least_trivial(self, knots, panel):
        for d in knots.values():
            for h in panel[:8]:
                assert count_homs(d, 2, h) >= 1

    def test_cap(self, trefoil):
        with pytest.raises(OrderCapExceeded):
            count_homs(trefoil, 1, named("S5"), cap=60)

    def test_bad_n(self, trefoil, s3):
        with pytest.raises(ValueError):
            count_homs(trefoil, 0, s3)

    def test_timeout(self, knots, monkeypatch):
        monkeypatch.setattr(census, "_TIME_CHECK_EVERY", 1)
        with pytest.raises(CensusTimeout):
            count_homs(knots["square"], 2, named("S5"), timeout=0.0)

    def test_plan_starts_at_first_arc(self, knots):
        for d in knots.values():
            if d.crossings:
                plan = search_plan(d)
                assert plan[0][0] == 0
                branched = [arc for arc, _ in plan]
                assert len(set(branched)) == len(branched)


def test_conjugation_covariance(trefoil, s3):
    # fixing x_1 = e: the count depends only on the class of e
    sols = [tuple(row) for block in naive_solutions(gn_presentation(trefoil, 1), s3) for row in block]
    by_first = {e: sum(1 for s in sols if s[0] == e) for e in range(s3.order)}
    for cls in s3.classes:
        assert len({by_first[e] for e in cls}) == 1
        for e in cls:
            assert count_homs_fixed(trefoil, 1, s3, e) == by_first[e]


def test_arc_images_share_a_class(knots):
    for h in map(named, ["S3", "D4", "A4"]):
        for name in ["trefoil", "figure-8", "granny"]:
            for n in (1, 2):
                for block in naive_solutions(gn_presentation(knots[name], n), h):
                    for row in block:
                        assert len({h.class_of(int(x)) for x in row}) == 1


def test_connected_sum_product_formula(trefoil, figure8):
    # Hom(K1 # K2) = sum over e of Hom(K1; x_1 -> e) * Hom(K2; x_1 -> e)
    for h in map(named, ["A4", "S4", "D5"]):
        for a, b in [(trefoil, figure8), (trefoil, mirror(trefoil))]:
            for n in (1, 2):
                expected = sum(
                    count_homs_fixed(a, n, h, e) * count_homs_fixed(b, n, h, e) for e in range(h.order)
                )
                assert count_homs(connect_sum(a, b), n, h) == expected


def test_mirror_inverts_meridian(trefoil):
    for h in map(named, ["A4", "A5"]):
        for n in (1, 2, 3):
            for e in range(h.order):
                assert count_homs_fixed(mirror(trefoil), n, h, e) == count_homs_fixed(trefoil, n, h, h.inv(e))


class TestFingerprint:
    def test_unknot(self, knots):
        fp = fingerprint(knots["unknot"], [named("S3"), named("S4")], {1, 2})
        assert fp.entries == {("S3", 1): 6, ("S3", 2): 6, ("S4", 1): 24, ("S4", 2): 24}
        assert fp.keys == [("S3", 1), ("S3", 2), ("S4", 1), ("S4", 2)]

    def test_trefoil(self, trefoil, s3):
        assert fingerprint(trefoil, [s3], {1}).entries == {("S3", 1): TREFOIL_S3}

    def test_mirror(self, trefoil, panel):
        a = fingerprint(trefoil, panel, {1, 2, 3})
        b = fingerprint(mirror(trefoil), panel, {1, 2, 3})
        assert a.entries == b.entries and a.diagram_id != b.diagram_id

    def test_timeout_recorded_as_absent(self, knots, monkeypatch):
        monkeypatch.setattr(census, "_TIME_CHECK_EVERY", 1)
        fp = fingerprint(knots["square"], [named("S5"), named("Z2")], [2], timeout=0.0)
        # a zero budget expires for every entry; the run still completes
        assert fp.absent == {("S5", 2): "timeout", ("Z2", 2): "timeout"}
        assert fp.entries == {}
        assert fp.to_json()["absent"][0] == {"group": "S5", "n": 2, "reason": "timeout"}

    def test_uses_cache(self, trefoil, s3):
        class Memo(dict):
            def get(self, did, h, n):
                return super().get((did, h.name, n))

            def put(self, did, h, n, count):
                self[(did, h.name, n)] = count

        memo = Memo()
        first = fingerprint(trefoil, [s3], [1, 2], cache=memo)
        assert len(memo) == 2
        memo[(first.diagram_id, "S3", 1)] = 999
        assert fingerprint(trefoil, [s3], [1], cache=memo).entries[("S3", 1)] == 999


class TestDistinguish:
    def test_trefoil_vs_figure8(self, trefoil, figure8, s3):
        v = distinguish(trefoil, figure8, [s3], {1})
        assert v.distinguished and v.witness == ("S3", 1, TREFOIL_S3, FIGURE8_S3)
        assert str(v) == "distinguished by S3 at n=1: 12 vs 6"

    def test_reflexive(self, knots, panel):
        for d in knots.values():
            v = distinguish(d, d, panel, {1, 2})
            assert not v.distinguished and v.witness is None

    def test_first_witness_in_panel_order(self, trefoil, figure8):
        # Z2 and A4 see 2 and 36 homs for both knots
        v = distinguish(trefoil, figure8, [named("Z2"), named("A4"), named("D5"), named("S3")], [1, 2])
        assert v.witness == ("D5", 1, 10, 30)

    def test_skips_absent(self, knots, monkeypatch):
        monkeypatch.setattr(census, "_TIME_CHECK_EVERY", 1)
        v = distinguish(knots["square"], knots["granny"], [named("S5")], [2], timeout=0.0)
        assert not v.distinguished and v.skipped == [("S5", 2, "timeout")]
        assert v.to_json()["skipped"] == [{"group": "S5", "n": 2, "reason": "timeout"}]

    def test_square_granny_classical(self, knots, panel):
        assert not distinguish(knots["square"], knots["granny"], panel, [1]).distinguished
