"""Fox p-colorings: arcs, the crossing congruence, and coloring counts.

An arc is a maximal run of a component between consecutive under
passes; a component that never goes under (in particular a free loop)
is a single closed arc.  A p-coloring assigns each arc a color in
Z/p so that at every crossing

    2 * (over arc)  =  (under-in arc) + (under-out arc)   (mod p)

For p = 3 this congruence says exactly "all three colors equal or all
distinct", the trichromatic rule.  The count of colorings is p to the
dimension of the solution space, computed by elimination mod p; a
coloring is proper when it uses at least two colors, and the p
monochromatic assignments always work, so proper = total - p.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .codes import OVER, UNDER, Diagram
from .errors import DomainError


@dataclass(frozen=True)
class ArcSet:
    """Arc decomposition of a diagram.

    arcs: per arc, (component, tuple of pass positions it covers) with
        the bounding under passes included at both ends.
    over_arc: crossing -> arc index of its over pass.
    under_in: crossing -> arc index ending at its under pass.
    under_out: crossing -> arc index starting at its under pass.
    """

    arcs: tuple
    over_arc: dict
    under_in: dict
    under_out: dict

    def __len__(self):
        return len(self.arcs)


@dataclass(frozen=True)
class ColoringCount:
    """Coloring census for one modulus."""

    p: int
    total: int
    proper: int


def arcs(d: Diagram) -> ArcSet:
    """Split every component into arcs at its under passes."""
    arc_list = []
    over_arc = {}
    under_in = {}
    under_out = {}
    for ci, comp in enumerate(d.components):
        m = len(comp)
        upos = [k for k, p in enumerate(comp) if p.role == UNDER]
        if not upos:
            # Closed arc: a free loop or a component that stays on top.
            idx = len(arc_list)
            arc_list.append((ci, tuple(range(m))))
            for k, p in enumerate(comp):
                over_arc[p.crossing] = idx
            continue
        for t, u in enumerate(upos):
            nxt = upos[(t + 1) % len(upos)]
            idx = len(arc_list)
            covered = [u]
            k = (u + 1) % m
            while k != nxt:
                covered.append(k)
                over_arc[comp[k].crossing] = idx
                k = (k + 1) % m
            covered.append(nxt)
            arc_list.append((ci, tuple(covered)))
            under_out[comp[u].crossing] = idx
            under_in[comp[nxt].crossing] = idx
    return ArcSet(tuple(arc_list), over_arc, under_in, under_out)


def _check_modulus(p: int):
    if p < 3 or p % 2 == 0 or any(p % q == 0 for q in range(3, int(p**0.5) + 1, 2)):
        raise DomainError(f"modulus must be an odd prime, got {p}")


def _crossing_rows(d: Diagram, aset: ArcSet, p: int):
    """One row 2*over - under_in - under_out = 0 per crossing."""
    rows = []
    for c in sorted(d.signs):
        row = [0] * len(aset)
        row[aset.over_arc[c]] += 2
        row[aset.under_in[c]] -= 1
        row[aset.under_out[c]] -= 1
        rows.append([x % p for x in row])
    return rows


def _rank_mod_p(rows, ncols, p):
    """Row-echelon rank over Z/p; pivot = first nonzero, lowest row."""
    rank = 0
    rows = [row[:] for row in rows]
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col] % p:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def count_colorings(d: Diagram, p: int) -> ColoringCount:
    """Count all and proper p-colorings by elimination mod p.

    Args:
        d: any diagram.
        p: an odd prime.

    Returns:
        ColoringCount with total = p^(solution dimension) and
        proper = total - p.
    """
    _check_modulus(p)
    aset = arcs(d)
    n = len(aset)
    rank = _rank_mod_p(_crossing_rows(d, aset, p), n, p)
    total = p ** (n - rank)
    return ColoringCount(p, total, total - p)


def count_colorings_by_enumeration(d: Diagram, p: int) -> ColoringCount:
    """Brute-force census over all p^arcs assignments (oracle for tests)."""
    _check_modulus(p)
    aset = arcs(d)
    crossings = sorted(d.signs)
    total = 0
    for colors in itertools.product(range(p), repeat=len(aset)):
        if all(
            (2 * colors[aset.over_arc[c]] - colors[aset.under_in[c]] - colors[aset.under_out[c]]) % p == 0
            for c in crossings
        ):
            total += 1
    return ColoringCount(p, total, total - p)


def is_colorable(d: Diagram, p: int) -> bool:
    """Whether some p-coloring uses at least two colors."""
    return count_colorings(d, p).proper > 0
