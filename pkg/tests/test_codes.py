"""Gauss code parsing, combinatorial maps, and genus."""

import pytest

from knots import (
    Basepoint,
    ConsistencyError,
    Diagram,
    Edge,
    ParseError,
    canonical_key,
    from_text,
    genus,
    is_realizable,
    mirror,
    parse_gauss,
    permute_components,
    reverse_all,
    reverse_component,
    to_gauss,
    to_text,
)

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"
FIG8 = "O1- U2+ O3+ U1- O4- U3+ O2+ U4-"
HOPF = "O1+ U2+ ; O2+ U1+"


def test_round_trip_is_identity_on_normalized_text():
    for text in (TREFOIL, FIG8, HOPF, "()", "() ; O1+ U1+"):
        assert to_text(from_text(text)) == text


def test_relabelling_is_by_first_occurrence():
    d = from_text("O7+ U3+ O5+ U7+ O3+ U5+")
    assert to_text(to_gauss(d)) == TREFOIL


def test_parse_rejects_bad_tokens():
    for bad in ("O1", "X1+", "O0+", "O1+ U1", "O1+ ; U1* "):
        with pytest.raises(ParseError):
            parse_gauss(bad)


def test_parse_rejects_inconsistent_codes():
    # Same role twice, sign drift, and odd visit counts.
    for bad in ("O1+ O1+", "O1+ U1-", "O1+ U2+ U1+", "O1+"):
        with pytest.raises(ConsistencyError):
            parse_gauss(bad)


def test_signs_are_shared_per_crossing():
    d = from_text(HOPF)
    assert d.signs == {1: 1, 2: 1}


def test_free_loop_component():
    d = from_text("() ; O1+ U1+")
    assert d.free_loops == (0,)
    assert d.n_crossings == 1


def test_trefoil_face_census():
    d = from_text(TREFOIL)
    sizes = sorted(len(f) for f in d.faces)
    # V=3, E=6, F=5 gives genus 0; faces are three bigons and two triangles.
    assert sizes == [2, 2, 2, 3, 3]
    assert genus(d) == (0,)


def test_all_catalog_style_codes_are_planar():
    for text in (TREFOIL, FIG8, HOPF, "O1+ U2+ O3+ U4+ O5+ U1+ O2+ U3+ O4+ U5+"):
        assert is_realizable(from_text(text))


def test_flipped_sign_breaks_planarity():
    # Changing one crossing sign without changing the words twists the
    # band: same words, genus jumps to one.
    twisted = "O1+ U2- O3+ U1+ O2- U3+"
    assert genus(from_text(twisted)) == (1,)
    assert not is_realizable(from_text(twisted))


def test_virtual_like_code_is_not_realizable():
    # The standard two-crossing virtual pattern.
    assert not is_realizable(from_text("O1+ U2+ U1+ O2+"))


def test_genus_of_disconnected_diagram_is_per_piece():
    d = from_text(TREFOIL + " ; ()")
    assert genus(d) == (0, 0)


def test_mirror_flips_roles_and_signs():
    d = from_text(HOPF)
    m = mirror(d)
    assert m.signs == {1: -1, 2: -1}
    assert to_text(m) == "U1- O2- ; U2- O1-"
    assert to_text(mirror(m)) == to_text(d)


def test_reverse_all_keeps_signs():
    d = from_text(TREFOIL)
    r = reverse_all(d)
    assert r.signs == d.signs
    assert genus(r) == (0,)


def test_reverse_component_flips_mixed_crossing_signs():
    d = from_text(HOPF)
    r = reverse_component(d, 1)
    # Both crossings involve the reversed component exactly once.
    assert r.signs == {1: -1, 2: -1}
    assert genus(r) == (0,)
    # Reversing twice restores the diagram.
    assert to_text(reverse_component(r, 1)) == to_text(d)


def test_reverse_component_on_knot_keeps_self_crossings():
    d = from_text(TREFOIL)
    assert reverse_component(d, 0).signs == d.signs


def test_permute_components():
    d = from_text(HOPF)
    p = permute_components(d, (1, 0))
    assert to_text(p) == "O2+ U1+ ; O1+ U2+"
    with pytest.raises(Exception):
        permute_components(d, (0, 0))


def test_canonical_key_ignores_labels_but_not_structure():
    a = from_text(TREFOIL)
    b = from_text("O2+ U5+ O9+ U2+ O5+ U9+")
    assert canonical_key(a) == canonical_key(b)
    assert canonical_key(a) != canonical_key(from_text(FIG8))


def test_edges_and_locate():
    d = from_text(HOPF)
    assert Edge(0, 0) in d.edges and Edge(1, 1) in d.edges
    c, r = d.locate[1]["O"]
    assert d.components[c][r].crossing == 1


def test_basepoint_type_is_plain_data():
    b = Basepoint(0, 2)
    assert b.component == 0 and b.position == 2


def test_diagram_equality_is_structural():
    assert from_text(TREFOIL) == from_text(TREFOIL)
    assert from_text(TREFOIL) != from_text(FIG8)
    assert len({from_text(TREFOIL), from_text(TREFOIL)}) == 1
