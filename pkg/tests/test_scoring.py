"""Scoring schemes: frozen values, witness enumeration, regularity checks."""

import math

import pytest

from superph import (MultiGraph, PointCloud, SubgraphFamily, WitnessConfig,
                     cech_points, cech_score, clique_delta, constant_scheme,
                     critical_values, is_regular_scheme, min_enclosing_ball,
                     pullback_score, seeded_random_scheme, vr_points,
                     vr_scheme, vr_score, witness_score)
from superph.scoring import round_score

from conftest import unit_square_cloud


# ---------------------------------------------------------------------------
# Vietoris–Rips
# ---------------------------------------------------------------------------

def test_vr_singleton_zero():
    pc = PointCloud({0: (3.0, 4.0)})
    assert vr_score([0], pc) == 0.0


def test_vr_two_points():
    pc = PointCloud({0: (0.0,), 1: (1.0,)})
    assert vr_score([0, 1], pc) == 0.5


def test_vr_unit_square():
    pc = unit_square_cloud()
    assert abs(vr_score([0, 1, 2, 3], pc) - math.sqrt(2) / 2) < 1e-12


def test_vr_unembedded_vertex():
    pc = PointCloud({0: (0.0,)})
    with pytest.raises(KeyError):
        vr_score([0, 1], pc)


# ---------------------------------------------------------------------------
# Čech / minimal enclosing ball
# ---------------------------------------------------------------------------

def test_cech_singleton_and_pair():
    pc = PointCloud({0: (0.0, 0.0), 1: (1.0, 0.0)})
    assert cech_score([0], pc) == 0.0
    assert abs(cech_score([0, 1], pc) - 0.5) < 1e-12


def test_cech_equilateral_triangle():
    pc = PointCloud({0: (0.0, 0.0), 1: (1.0, 0.0), 2: (0.5, math.sqrt(3) / 2)})
    got = cech_score([0, 1, 2], pc)
    assert abs(got - 1 / math.sqrt(3)) < 1e-9
    # cross-check with a coarse grid minimization of the max distance
    pts = pc.of([0, 1, 2])
    best = min(max(math.dist((x / 200, y / 200), p) for p in pts)
               for x in range(0, 201) for y in range(0, 201))
    assert got <= best + 1e-3


def test_meb_on_collinear_and_dupes():
    center, r = min_enclosing_ball([(0.0,), (1.0,), (0.25,), (1.0,)])
    assert abs(r - 0.5) < 1e-9 and abs(center[0] - 0.5) < 1e-9


def test_meb_high_dimension():
    pts = [(1.0, 0.0, 0.0, 0.0), (0.0, 1.0, 0.0, 0.0),
           (0.0, 0.0, 1.0, 0.0), (0.0, 0.0, 0.0, 1.0)]
    _, r = min_enclosing_ball(pts)
    assert abs(r - math.sqrt(3) / 2) < 1e-9  # circumradius of the regular simplex


def test_vr_cech_inequalities(rng):
    for _ in range(25):
        pts = [tuple(rng.uniform(0, 3) for _ in range(2))
               for _ in range(rng.randint(1, 8))]
        vr = vr_points(pts)
        cech = cech_points(pts)
        assert vr - 1e-9 <= cech <= 2 * vr + 1e-9


def test_monotone_under_inclusion(rng):
    for _ in range(20):
        pts = [tuple(rng.uniform(0, 3) for _ in range(2))
               for _ in range(rng.randint(2, 8))]
        sub = pts[:rng.randint(1, len(pts))]
        assert vr_points(sub) <= vr_points(pts) + 1e-12
        assert cech_points(sub) <= cech_points(pts) + 1e-9


# ---------------------------------------------------------------------------
# witness scores
# ---------------------------------------------------------------------------

def test_witness_strong_single_landmark():
    pc = PointCloud({"l": (2.0, 2.0)})
    cfg = WitnessConfig(witness_set=((2.0, 2.0),))
    assert witness_score(["l"], pc, cfg, "strong") == 0.0


def test_witness_weak_two_point_line():
    pc = PointCloud({0: (0.0,), 1: (1.0,)})
    got = witness_score([0], pc, WitnessConfig(), "weak")
    # enumerate both witnesses: x=0 gives -1, x=1 gives 1
    assert got == -1.0


def test_witness_strong_three_point_line():
    pc = PointCloud({0: (0.0,), 1: (1.0,), 2: (3.0,)})
    got = witness_score([0, 1], pc, WitnessConfig(), "strong")
    assert got == 1.0  # values at x = 0, 1, 3 are 1, 1, 3


def test_witness_weak_rejects_full_subset():
    pc = PointCloud({0: (0.0,), 1: (1.0,)})
    with pytest.raises(ValueError):
        witness_score([0, 1], pc, WitnessConfig(), "weak")


def test_witness_single_witness_degenerate_inf():
    pc = PointCloud({0: (0.0,), 1: (2.0,)})
    w = (5.0,)
    cfg = WitnessConfig(witness_set=(w,))
    got = witness_score([0], pc, cfg, "strong")
    assert got == math.dist(w, (0.0,)) - math.dist(w, (2.0,))


def test_witness_vr_variants_singleton():
    pc = PointCloud({0: (0.0,), 1: (1.0,)})
    cfg = WitnessConfig()
    assert witness_score([0], pc, cfg, "vr_strong") == \
        witness_score([0], pc, cfg, "strong")


# ---------------------------------------------------------------------------
# pull-back scoring
# ---------------------------------------------------------------------------

def test_pullback_constant_is_zero():
    g = MultiGraph.complete([0, 1, 2])
    f = {v: (0.0, 0.0) for v in g.vertices}
    for sub in [g.full(), g.induced({0, 1})]:
        assert pullback_score(f, vr_points, sub) == 0.0


def test_pullback_injective_agrees_with_direct():
    g = MultiGraph.complete([0, 1, 2, 3])
    pc = unit_square_cloud()
    h = g.induced({0, 2})
    assert pullback_score(pc.points, vr_points, h) == vr_score([0, 2], pc)


def test_pullback_collapsing_pair():
    g = MultiGraph.complete([0, 1, 2])
    f = {0: (0.0, 0.0), 1: (0.0, 0.0), 2: (3.0, 0.0)}
    h = g.full()
    assert pullback_score(f, vr_points, h) == 1.5


def test_pullback_undefined_vertex():
    g = MultiGraph.complete([0, 1])
    with pytest.raises(ValueError):
        pullback_score({0: (0.0,)}, vr_points, g.full())


# ---------------------------------------------------------------------------
# regularity and critical values
# ---------------------------------------------------------------------------

def test_vr_scheme_regular_on_family():
    g = MultiGraph.complete([0, 1, 2, 3])
    pc = unit_square_cloud()
    fam = SubgraphFamily(g, [g.full(), g.induced({0, 1}), g.induced({0, 2, 3})])
    ok, pair = is_regular_scheme(vr_scheme(pc), fam)
    assert ok and pair is None


def test_constant_scheme_regular():
    g = MultiGraph.complete([0, 1])
    ok, _ = is_regular_scheme(constant_scheme(2.0), SubgraphFamily(g, [g.full()]))
    assert ok


def test_weak_witness_not_regular_on_line():
    from superph import witness_scheme
    pc = PointCloud({0: (0.0,), 1: (1.0,), 2: (2.5,), 3: (6.0,)})
    g = MultiGraph.complete([0, 1, 2, 3])
    scheme = witness_scheme(pc, WitnessConfig(), "weak")
    fam = SubgraphFamily(g, [g.induced(s) for s in
                             [{0}, {0, 1}, {0, 1, 2}, {1, 2}, {2}, {1}]])
    ok, pair = is_regular_scheme(scheme, fam)
    assert not ok
    small, large = pair
    assert small.vertices <= large.vertices
    assert scheme.score(small) > scheme.score(large)


def test_critical_values_unit_square():
    pc = unit_square_cloud()
    ds = clique_delta(MultiGraph.complete([0, 1, 2, 3]), max_dim=3)
    got = critical_values(vr_scheme(pc), ds)
    assert got == [0.0, 0.5, round_score(math.sqrt(2) / 2)]


def test_critical_values_constant_and_single_vertex():
    g = MultiGraph.complete([7])
    ds = clique_delta(g, max_dim=1)
    assert critical_values(constant_scheme(1.5), ds) == [1.5]
    assert critical_values(vr_scheme(PointCloud({7: (0.0,)})), ds) == [0.0]


def test_seeded_random_deterministic_across_instances():
    g = MultiGraph.complete([0, 1, 2])
    s1 = seeded_random_scheme(42)
    s2 = seeded_random_scheme(42)
    s3 = seeded_random_scheme(43)
    h = g.full()
    assert s1.score(h) == s2.score(h)
    assert s1.score(h) != s3.score(h)
    assert not s1.regular
