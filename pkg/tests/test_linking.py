"""Modulo-2 and integral linking numbers."""

import pytest

from knots import (
    DomainError,
    from_text,
    linking_matrix,
    lk,
    lk2,
    permute_components,
    reverse_component,
)

HOPF_PLUS = "O1+ U2+ ; O2+ U1+"
HOPF_MINUS = "U1- O2- ; U2- O1-"
WHITEHEAD = "U1- O2- U3+ O4+ ; O1- U5+ O3+ U4+ O5+ U2-"
BORROMEAN = "O1+ U5+ O2- U6- ; O3+ U1+ O4- U2- ; O5+ U3+ O6- U4-"


def test_hopf_linking_numbers():
    d = from_text(HOPF_PLUS)
    assert lk2(d, 0, 1) == 1
    assert lk(d, 0, 1) == 1
    m = from_text(HOPF_MINUS)
    assert lk2(m, 0, 1) == 1
    assert lk(m, 0, 1) == -1


def test_lk_is_symmetric_in_the_arguments():
    for text in (HOPF_PLUS, HOPF_MINUS, WHITEHEAD, BORROMEAN):
        d = from_text(text)
        for i in range(d.n_components):
            for j in range(d.n_components):
                if i != j:
                    assert lk(d, i, j) == lk(d, j, i)
                    assert lk2(d, i, j) == lk2(d, j, i)


def test_lk_survives_component_renumbering():
    d = from_text(HOPF_PLUS)
    swapped = permute_components(d, (1, 0))
    assert lk(swapped, 0, 1) == lk(d, 0, 1)
    assert lk2(swapped, 0, 1) == lk2(d, 0, 1)


def test_reversing_one_component_negates_lk():
    for text in (HOPF_PLUS, HOPF_MINUS):
        d = from_text(text)
        r = reverse_component(d, 0)
        assert lk(r, 0, 1) == -lk(d, 0, 1)
        assert lk2(r, 0, 1) == lk2(d, 0, 1)  # parity is blind to direction


def test_reversing_both_components_restores_lk():
    d = from_text(HOPF_PLUS)
    r = reverse_component(reverse_component(d, 0), 1)
    assert lk(r, 0, 1) == lk(d, 0, 1)


def test_whitehead_links_to_zero():
    d = from_text(WHITEHEAD)
    assert lk(d, 0, 1) == 0
    assert lk2(d, 0, 1) == 0


def test_borromean_pairs_all_vanish():
    d = from_text(BORROMEAN)
    for i in range(3):
        for j in range(3):
            if i != j:
                assert lk(d, i, j) == 0
                assert lk2(d, i, j) == 0


def test_split_components_have_zero_lk():
    d = from_text("O1+ U1+ ; O2+ U2+")
    assert lk(d, 0, 1) == 0


def test_lk2_is_lk_mod_two():
    for text in (HOPF_PLUS, HOPF_MINUS, WHITEHEAD, BORROMEAN):
        d = from_text(text)
        for i in range(d.n_components):
            for j in range(i + 1, d.n_components):
                assert lk2(d, i, j) == lk(d, i, j) % 2


def test_linking_matrix_reports():
    d = from_text(BORROMEAN)
    reports = linking_matrix(d)
    assert len(reports) == 6  # ordered pairs of three components
    assert all(r.lk == 0 and r.lk2 == 0 for r in reports)
    h = linking_matrix(from_text(HOPF_MINUS))
    assert {r.pair: r.lk for r in h} == {(0, 1): -1, (1, 0): -1}


def test_bad_component_indices_raise():
    d = from_text(HOPF_PLUS)
    for i, j in ((0, 0), (0, 2), (-1, 1)):
        with pytest.raises(DomainError):
            lk(d, i, j)
        with pytest.raises(DomainError):
            lk2(d, i, j)


def test_doubled_strand_counts_multiplicity():
    # (2,4) torus link: every crossing between the components, lk = 2.
    d = from_text("O1+ U2+ O3+ U4+ ; O2+ U3+ O4+ U1+")
    assert lk(d, 0, 1) == 2
    assert lk2(d, 0, 1) == 0
