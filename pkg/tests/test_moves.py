"""Reidemeister move detection, application, and random walks."""

import pytest

from knots import (
    DEFAULT_WEIGHTS,
    DomainError,
    Edge,
    MoveSite,
    NonPlanarError,
    WalkPlan,
    apply_move,
    canonical_key,
    casson,
    connected_sum,
    conway,
    crossing_change,
    disjoint_union,
    enumerate_sites,
    from_text,
    genus,
    is_realizable,
    lk,
    poly_text,
    random_walk,
    smooth,
    to_text,
)

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"
KINK = "O1+ U1+"
R2_PAIR = "O1+ O2- U2- U1+"


def _sites(d, kind):
    return [s for s in enumerate_sites(d, kinds=(kind,)) if s.kind == kind]


def test_trefoil_has_no_removal_or_r3_sites():
    d = from_text(TREFOIL)
    for kind in ("R1-", "R2-", "R3"):
        assert _sites(d, kind) == []


def test_kink_has_one_r1_site_and_removal_round_trips():
    d = from_text(KINK)
    sites = _sites(d, "R1-")
    assert len(sites) == 1
    out = apply_move(d, sites[0])
    assert out.n_crossings == 0 and out.n_components == 1


def test_r2_pair_has_one_removal_site():
    d = from_text(R2_PAIR)
    sites = _sites(d, "R2-")
    assert len(sites) == 1
    assert to_text(apply_move(d, sites[0])) == "()"


def test_r1_plus_inverts_r1_minus():
    d = from_text(TREFOIL)
    for site in enumerate_sites(d, kinds=("R1+",))[:8]:
        grown = apply_move(d, site)
        assert grown.n_crossings == 4
        assert is_realizable(grown)
        backs = _sites(grown, "R1-")
        assert any(
            canonical_key(apply_move(grown, b)) == canonical_key(d) for b in backs
        )


def test_r2_plus_inverts_r2_minus():
    d = from_text(TREFOIL)
    sites = enumerate_sites(d, kinds=("R2+",))
    assert sites
    for site in sites[:12]:
        grown = apply_move(d, site)
        assert grown.n_crossings == 5
        assert is_realizable(grown)
        backs = _sites(grown, "R2-")
        assert any(
            canonical_key(apply_move(grown, b)) == canonical_key(d) for b in backs
        )


def test_r2_plus_reaches_across_pieces():
    d = from_text("O1+ U1+ ; O2+ U2+")
    assert genus(d) == (0, 0)
    cross = [
        s
        for s in enumerate_sites(d, kinds=("R2+",))
        if s.anchor[0].component != s.anchor[1].component
    ]
    assert cross
    joined = apply_move(d, cross[0])
    assert len(genus(joined)) == 1  # now a single connected piece


def test_r3_fires_after_an_r2_setup():
    # Slide a strand over a crossing: R2+ then look for a triangle.
    base = from_text(TREFOIL)
    found = False
    for site in enumerate_sites(base, kinds=("R2+",)):
        grown = apply_move(base, site)
        for tri in _sites(grown, "R3"):
            moved = apply_move(grown, tri)
            found = True
            assert moved.n_crossings == grown.n_crossings
            assert is_realizable(moved)
            assert sorted(moved.signs.values()) == sorted(grown.signs.values())
            # R3 is its own inverse at the matching triangle.
            again = [
                t
                for t in _sites(moved, "R3")
                if canonical_key(apply_move(moved, t)) == canonical_key(grown)
            ]
            assert again
        if found:
            break
    assert found


def test_enumerate_sites_rejects_nonplanar_diagrams():
    with pytest.raises(NonPlanarError):
        enumerate_sites(from_text("O1+ U2+ U1+ O2+"))


def test_apply_rejects_stale_sites():
    d = from_text(KINK)
    site = _sites(d, "R1-")[0]
    shrunk = apply_move(d, site)
    with pytest.raises(DomainError):
        apply_move(shrunk, site)


def test_crossing_change_flips_one_crossing():
    d = from_text(TREFOIL)
    c = crossing_change(d, 2)
    assert c.signs[2] == -1 and c.signs[1] == 1
    roles = [p.role for p in c.components[0] if p.crossing == 2]
    assert sorted(roles) == ["O", "U"]
    assert to_text(crossing_change(c, 2)) == to_text(d)


def test_smooth_splits_or_merges_components():
    d = from_text(TREFOIL)
    s = smooth(d, 1)
    assert s.n_components == 2 and s.n_crossings == 2
    hopf = from_text("O1+ U2+ ; O2+ U1+")
    merged = smooth(hopf, 1)
    assert merged.n_components == 1 and merged.n_crossings == 1


def test_smooth_respects_orientation_on_the_trefoil():
    # Smoothing any trefoil crossing yields the Hopf link, lk = 1.
    d = from_text(TREFOIL)
    for c in (1, 2, 3):
        s = smooth(d, c)
        assert lk(s, 0, 1) == 1


def test_disjoint_union_relabels():
    a = from_text(TREFOIL)
    b = from_text(KINK)
    u = disjoint_union(a, b)
    assert u.n_components == 2
    assert u.n_crossings == 4
    assert genus(u) == (0, 0)


def test_connected_sum_of_trefoils():
    t = from_text(TREFOIL)
    s = connected_sum(t, 0, t, 0)
    assert s.n_components == 1 and s.n_crossings == 6
    assert is_realizable(s)
    assert casson(s) == 2


def test_connected_sum_with_unknot_is_identity():
    t = from_text(TREFOIL)
    u = from_text("()")
    s = connected_sum(t, 0, u, 0)
    assert canonical_key(s) == canonical_key(t)


def test_connected_sum_respects_edge_choice():
    t = from_text(TREFOIL)
    for ea in range(6):
        s = connected_sum(t, 0, t, 0, edge_a=ea, edge_b=0)
        assert poly_text(conway(s)) == "1 + 2t^2 + t^4"


def test_random_walk_is_deterministic_and_planar():
    d = from_text(TREFOIL)
    plan = WalkPlan(seed=11, steps=60)
    one = random_walk(d, plan)
    two = random_walk(d, plan)
    assert to_text(one) == to_text(two)
    assert is_realizable(one)
    assert random_walk(d, WalkPlan(seed=12, steps=60)) != one


def test_random_walk_weights_bias_growth():
    d = from_text(TREFOIL)
    grow = random_walk(d, WalkPlan(seed=3, steps=40, weights={"R2+": 1.0}))
    assert grow.n_crossings == 3 + 2 * 40
    shrink = random_walk(grow, WalkPlan(seed=4, steps=500))
    assert shrink.n_crossings < grow.n_crossings


def test_default_weights_prefer_removal():
    assert DEFAULT_WEIGHTS["R1-"] > DEFAULT_WEIGHTS["R1+"]


def test_walk_plan_validation():
    with pytest.raises(Exception):
        WalkPlan(seed=0, steps=-1)
    with pytest.raises(Exception):
        WalkPlan(seed=0, steps=1, weights={"R9": 1.0})


def test_move_site_is_hashable():
    d = from_text(KINK)
    s = _sites(d, "R1-")[0]
    assert isinstance(s, MoveSite)
    assert s in {s}


def test_insertion_sites_cover_free_loops():
    d = from_text("()")
    sites = enumerate_sites(d, kinds=("R1+",))
    assert {s.anchor for s in sites} == {(Edge(0, 0),)}
    kinked = apply_move(d, sites[0])
    assert kinked.n_crossings == 1 and genus(kinked) == (0,)
