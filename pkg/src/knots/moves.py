"""Diagram surgery: Reidemeister moves, crossing changes, smoothing,
connected sum, disjoint union, and random move walks.

Move detection works on the face structure of the combinatorial map:

* a face with one dart is a curl, removable by R1;
* a face with two darts at two crossings, whose one boundary arc is
  overcrossing at both ends and the other undercrossing at both ends,
  is a bigon removable by R2 (the two signs are then opposite);
* a face with three darts at three crossings is an R3 triangle when the
  three strands along its sides are totally ordered by the over/under
  relations at the corners (top strand over both others, bottom strand
  under both) and no strand runs straight through a corner.

Insertion moves are parameterized: every arc admits four R1 curls
(role order x sign), and R2 pokes are generated per eligible arc pair
and kept only when the poked code is still planar.  Applying R3 swaps
the two adjacent passes across each of the three side arcs; the three
crossings keep their signs.

All operations return new diagrams; inputs are never modified.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .codes import (
    OVER,
    UNDER,
    Diagram,
    Edge,
    Pass,
    genus,
    is_realizable,
)
from .errors import (
    DomainError,
    InvalidSiteError,
    NonPlanarError,
    UnknownCrossingError,
)


@dataclass(frozen=True)
class MoveSite:
    """A place where one Reidemeister move applies.

    kind: 'R1+', 'R1-', 'R2+', 'R2-' or 'R3'.
    anchor: crossing ids for removals, arcs for insertions, the face's
        dart tuple for R3.
    variant: strand/chirality choice for insertions, '' otherwise.
    """

    kind: str
    anchor: tuple
    variant: str = ""


@dataclass(frozen=True)
class WalkPlan:
    """Deterministic recipe for a random move walk."""

    seed: int
    steps: int
    weights: Optional[Mapping[str, float]] = None

    def __post_init__(self):
        if self.steps < 0:
            raise DomainError(f"negative step count {self.steps}")
        self.effective_weights()

    def effective_weights(self):
        w = dict(DEFAULT_WEIGHTS if self.weights is None else self.weights)
        if not set(w) <= set(DEFAULT_WEIGHTS):
            raise DomainError(f"unknown move kinds in weights {w!r}")
        if any(v < 0 for v in w.values()) or not any(v > 0 for v in w.values()):
            raise DomainError(f"bad walk weights {w!r}")
        return {k: v for k, v in w.items() if v > 0}


# Bias toward removals so fuzzed diagrams stay small enough for the
# exponential invariants computed on the walk endpoints.
DEFAULT_WEIGHTS = {"R1+": 1.0, "R2+": 1.0, "R3": 2.0, "R1-": 2.5, "R2-": 2.5}

_R1_VARIANTS = ("OU+", "OU-", "UO+", "UO-")
# R2 poke: relative direction of the two strand pieces, which strand
# goes on top, and the sign of the first new crossing (the second takes
# the opposite sign).
_R2_VARIANTS = tuple(
    f"{rel}:{over}:{s}" for rel in ("par", "anti") for over in ("A", "B") for s in "+-"
)


def fresh_label(d: Diagram, count: int = 1):
    """``count`` crossing ids unused by ``d``."""
    base = max(d.signs, default=0)
    return tuple(base + i + 1 for i in range(count))


# ----------------------------------------------------------------------
# Detection


def _monogon_crossings(d: Diagram):
    out = sorted({face[0].crossing for face in d.faces if len(face) == 1})
    return out


def _bigon_pairs(d: Diagram):
    """Crossing pairs removable by R2, from bigon faces."""
    pairs = set()
    for face in d.faces:
        if len(face) != 2:
            continue
        c1, c2 = face[0].crossing, face[1].crossing
        if c1 == c2:
            continue
        e1, e2 = d.face_edges(face)
        if e1 == e2:
            continue
        roles = []
        for edge in (e1, e2):
            head = d.pass_at(edge.component, edge.position)
            tail = d.pass_at(edge.component, edge.position - 1)
            roles.append({head.role, tail.role})
        # One side arc is the over strand at both crossings, the other
        # the under strand at both; anything else is not an R2 bigon.
        if (roles[0], roles[1]) not in (({OVER}, {UNDER}), ({UNDER}, {OVER})):
            continue
        if d.signs[c1] != -d.signs[c2]:
            continue
        pairs.add(tuple(sorted((c1, c2))))
    return sorted(pairs)


def _canonical_face(face):
    k = min(range(len(face)), key=lambda i: face[i])
    return face[k:] + face[:k]


def _triangle_sites(d: Diagram):
    """R3 triangles: three strands totally ordered by over/under."""
    out = []
    alpha = d._alpha
    for face in d.faces:
        if len(face) != 3:
            continue
        if len({dart.crossing for dart in face}) != 3:
            continue
        if len(set(d.face_edges(face))) != 3:
            continue
        # Walking the boundary, side i runs from the corner of face[i]
        # to the corner of face[i+1]: it reaches that corner as the
        # dart alpha(face[i]), and side i+1 leaves it as face[i+1].
        ok = True
        wins = [0, 0, 0]
        for i in range(3):
            arriving = alpha[face[i]]
            leaving = face[(i + 1) % 3]
            # Both darts sit at the shared corner; equal role letters
            # would mean one strand running straight through it.
            if arriving.slot[0] == leaving.slot[0]:
                ok = False
                break
            if arriving.slot[0] == "o":
                wins[i] += 1
            else:
                wins[(i + 1) % 3] += 1
        if not ok:
            continue
        # A transitive tournament on 3 players scores {0, 1, 2}; the
        # cyclic one scores {1, 1, 1} and admits no R3 (the trefoil's
        # two triangles are the standard example).
        if sorted(wins) != [0, 1, 2]:
            continue
        out.append(MoveSite("R3", _canonical_face(face)))
    out.sort(key=lambda s: s.anchor)
    return out


def _insertion_edges(d: Diagram):
    """Real arcs plus one pseudo-arc per free loop."""
    return tuple(d.edges) + tuple(Edge(ci, 0) for ci in d.free_loops)


def _edge_piece(d: Diagram, edge: Edge):
    comp = d.components[edge.component]
    if not comp:
        return ("loop", edge.component)
    crossing = comp[edge.position % len(comp)].crossing
    for idx, piece in enumerate(d.pieces):
        if crossing in piece:
            return ("piece", idx)
    raise AssertionError("edge not in any piece")


def _r2_candidate_pairs(d: Diagram):
    """Unordered arc pairs eligible for an R2 poke.

    Distinct arcs bounding a common face (the poke happens inside that
    face), plus every pair of arcs from different connected pieces (a
    split piece can always be slid next to another).
    """
    pairs = set()
    for face in d.faces:
        edges = sorted(set(d.face_edges(face)))
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                pairs.add((edges[i], edges[j]))
    all_edges = _insertion_edges(d)
    piece_of = {e: _edge_piece(d, e) for e in all_edges}
    for i in range(len(all_edges)):
        for j in range(i + 1, len(all_edges)):
            a, b = all_edges[i], all_edges[j]
            if piece_of[a] != piece_of[b]:
                pairs.add(tuple(sorted((a, b))))
    return sorted(pairs)


def enumerate_sites(d: Diagram, kinds: Optional[Sequence[str]] = None):
    """All move sites on ``d``, every insertion variant included.

    Args:
        d: a planar diagram.
        kinds: restrict to these move kinds (default: all five).

    Returns:
        Tuple of MoveSite in a deterministic order.

    Raises:
        NonPlanarError: if some piece of ``d`` has genus > 0.
    """
    if not is_realizable(d):
        raise NonPlanarError(f"genus {genus(d)} diagram; moves need genus 0")
    wanted = set(kinds) if kinds is not None else {"R1+", "R1-", "R2+", "R2-", "R3"}
    sites = []
    if "R1-" in wanted:
        sites.extend(MoveSite("R1-", (c,)) for c in _monogon_crossings(d))
    if "R2-" in wanted:
        sites.extend(MoveSite("R2-", pair) for pair in _bigon_pairs(d))
    if "R3" in wanted:
        sites.extend(_triangle_sites(d))
    if "R1+" in wanted:
        for edge in _insertion_edges(d):
            sites.extend(MoveSite("R1+", (edge,), v) for v in _R1_VARIANTS)
    if "R2+" in wanted:
        for pair in _r2_candidate_pairs(d):
            for v in _R2_VARIANTS:
                site = MoveSite("R2+", pair, v)
                try:
                    candidate = _apply_r2_plus(d, site)
                except InvalidSiteError:
                    continue
                if is_realizable(candidate):
                    sites.append(site)
    return tuple(sites)


# ----------------------------------------------------------------------
# Application


def _require(cond, msg):
    if not cond:
        raise InvalidSiteError(msg)


def _apply_r1_minus(d: Diagram, site: MoveSite) -> Diagram:
    (c,) = site.anchor
    if c not in d.signs:
        raise UnknownCrossingError(f"no crossing {c!r}")
    where = d.locate[c]
    (ci, ko), (cj, ku) = where[OVER], where[UNDER]
    _require(ci == cj, f"crossing {c} passes lie on different components")
    comp = d.components[ci]
    m = len(comp)
    _require((ko - ku) % m == 1 or (ku - ko) % m == 1, f"crossing {c} is not a curl")
    keep = tuple(p for p in comp if p.crossing != c)
    comps = list(d.components)
    comps[ci] = keep
    return Diagram(comps)


def _apply_r2_minus(d: Diagram, site: MoveSite) -> Diagram:
    c1, c2 = site.anchor
    for c in (c1, c2):
        if c not in d.signs:
            raise UnknownCrossingError(f"no crossing {c!r}")
    _require(
        tuple(sorted((c1, c2))) in _bigon_pairs(d),
        f"crossings {c1},{c2} do not bound a removable bigon",
    )
    gone = {c1, c2}
    comps = [tuple(p for p in comp if p.crossing not in gone) for comp in d.components]
    return Diagram(comps)


def _apply_r3(d: Diagram, site: MoveSite) -> Diagram:
    face = None
    for f in d.faces:
        if _canonical_face(f) == site.anchor:
            face = f
            break
    _require(face is not None, "no such triangle face")
    if MoveSite("R3", _canonical_face(face)) not in _triangle_sites(d):
        raise InvalidSiteError("triangle does not match the R3 pattern")
    comps = [list(c) for c in d.components]
    for edge in set(d.face_edges(face)):
        comp = comps[edge.component]
        m = len(comp)
        k, kprev = edge.position % m, (edge.position - 1) % m
        comp[kprev], comp[k] = comp[k], comp[kprev]
    return Diagram(tuple(tuple(c) for c in comps))


def _parse_r1_variant(variant):
    _require(variant in _R1_VARIANTS, f"bad R1+ variant {variant!r}")
    order, sign = variant[:2], 1 if variant[2] == "+" else -1
    return order, sign


def _apply_r1_plus(d: Diagram, site: MoveSite) -> Diagram:
    (edge,) = site.anchor
    order, sign = _parse_r1_variant(site.variant)
    comps = [list(c) for c in d.components]
    _require(0 <= edge.component < len(comps), f"no component {edge.component}")
    comp = comps[edge.component]
    if comp:
        pos = edge.position % len(comp)
    else:
        _require(edge.position == 0, "free loop has only arc 0")
        pos = 0
    (label,) = fresh_label(d)
    roles = (OVER, UNDER) if order == "OU" else (UNDER, OVER)
    comp[pos:pos] = [Pass(label, roles[0], sign), Pass(label, roles[1], sign)]
    out = Diagram(tuple(tuple(c) for c in comps))
    if not is_realizable(out):  # cannot happen; guard against regressions
        raise AssertionError("R1+ broke planarity")
    return out


def _parse_r2_variant(variant):
    _require(variant in _R2_VARIANTS, f"bad R2+ variant {variant!r}")
    rel, over, s = variant.split(":")
    return rel, over, 1 if s == "+" else -1


def _apply_r2_plus(d: Diagram, site: MoveSite) -> Diagram:
    edge_a, edge_b = site.anchor
    _require(edge_a != edge_b, "R2+ needs two distinct arcs")
    rel, over, s1 = _parse_r2_variant(site.variant)
    n1, n2 = fresh_label(d, 2)
    signs = {n1: s1, n2: -s1}
    role_a = OVER if over == "A" else UNDER
    role_b = UNDER if over == "A" else OVER
    a_passes = [Pass(n1, role_a, signs[n1]), Pass(n2, role_a, signs[n2])]
    b_order = (n1, n2) if rel == "par" else (n2, n1)
    b_passes = [Pass(c, role_b, signs[c]) for c in b_order]

    comps = [list(c) for c in d.components]
    for edge in (edge_a, edge_b):
        _require(0 <= edge.component < len(comps), f"no component {edge.component}")

    def position(edge):
        comp = comps[edge.component]
        if not comp:
            _require(edge.position == 0, "free loop has only arc 0")
            return 0
        return edge.position % len(comp)

    pa, pb = position(edge_a), position(edge_b)
    if edge_a.component == edge_b.component:
        _require(pa != pb, "R2+ needs two distinct arcs")
        # Insert at the later slot first so the earlier index stays valid.
        first, second = sorted(
            ((pa, a_passes), (pb, b_passes)), key=lambda t: -t[0]
        )
        comp = comps[edge_a.component]
        comp[first[0] : first[0]] = first[1]
        comp[second[0] : second[0]] = second[1]
    else:
        comps[edge_a.component][pa:pa] = a_passes
        comps[edge_b.component][pb:pb] = b_passes
    return Diagram(tuple(tuple(c) for c in comps))


def apply(d: Diagram, site: MoveSite) -> Diagram:
    """Apply one move at ``site``; raises InvalidSiteError when stale."""
    if site.kind == "R1-":
        return _apply_r1_minus(d, site)
    if site.kind == "R2-":
        return _apply_r2_minus(d, site)
    if site.kind == "R3":
        return _apply_r3(d, site)
    if site.kind == "R1+":
        return _apply_r1_plus(d, site)
    if site.kind == "R2+":
        out = _apply_r2_plus(d, site)
        if not is_realizable(out):
            raise InvalidSiteError(f"variant {site.variant} not planar here")
        return out
    raise InvalidSiteError(f"unknown move kind {site.kind!r}")


# ----------------------------------------------------------------------
# Non-Reidemeister surgery


def crossing_change(d: Diagram, c) -> Diagram:
    """Exchange over and under at ``c`` (and so flip its sign)."""
    if c not in d.signs:
        raise UnknownCrossingError(f"no crossing {c!r}")
    swap = {OVER: UNDER, UNDER: OVER}
    return Diagram(
        tuple(
            tuple(
                Pass(p.crossing, swap[p.role], -p.sign) if p.crossing == c else p
                for p in comp
            )
            for comp in d.components
        )
    )


def smooth(d: Diagram, c) -> Diagram:
    """Oriented smoothing at ``c``: over-in joins under-out and vice versa.

    Splits the component when both passes of ``c`` lie on one component,
    merges the two components otherwise.
    """
    if c not in d.signs:
        raise UnknownCrossingError(f"no crossing {c!r}")
    (ci, ki), (cj, kj) = d.locate[c][OVER], d.locate[c][UNDER]
    comps = list(d.components)
    if ci == cj:
        comp = comps[ci]
        i, j = sorted((ki, kj))
        cycle1 = comp[i + 1 : j]
        cycle2 = comp[j + 1 :] + comp[:i]
        comps[ci : ci + 1] = [cycle1, cycle2]
    else:
        a, b = comps[ci], comps[cj]
        merged = a[ki + 1 :] + a[:ki] + b[kj + 1 :] + b[:kj]
        lo, hi = sorted((ci, cj))
        comps[lo] = merged
        del comps[hi]
    return Diagram(comps)


def _shift_labels(d: Diagram, offset: int):
    return tuple(
        tuple(Pass(p.crossing + offset, p.role, p.sign) for p in comp)
        for comp in d.components
    )


def disjoint_union(a: Diagram, b: Diagram) -> Diagram:
    """Place ``b`` next to ``a`` with relabelled crossings."""
    offset = max(a.signs, default=0)
    return Diagram(a.components + _shift_labels(b, offset))


def connected_sum(
    a: Diagram, comp_a: int, b: Diagram, comp_b: int, edge_a: int = 0, edge_b: int = 0
) -> Diagram:
    """Cut arc ``edge_a`` of a's component and arc ``edge_b`` of b's,
    then cross-join respecting orientation.

    Arc k of a component is the arc arriving at its pass k.  A free-loop
    component has the single virtual arc 0 and acts as an identity.
    """
    if not 0 <= comp_a < a.n_components:
        raise DomainError(f"no component {comp_a} in first diagram")
    if not 0 <= comp_b < b.n_components:
        raise DomainError(f"no component {comp_b} in second diagram")
    ca = a.components[comp_a]
    cb = b.components[comp_b]
    for name, comp, k in (("first", ca, edge_a), ("second", cb, edge_b)):
        limit = max(len(comp), 1)
        if not 0 <= k < limit:
            raise DomainError(f"no arc {k} on the chosen {name} component")
    offset = max(a.signs, default=0)
    b_comps = _shift_labels(b, offset)
    cb = b_comps[comp_b]
    merged = ca[edge_a:] + ca[:edge_a] + cb[edge_b:] + cb[:edge_b]
    comps = list(a.components)
    comps[comp_a] = merged
    comps.extend(c for i, c in enumerate(b_comps) if i != comp_b)
    return Diagram(comps)


# ----------------------------------------------------------------------
# Random walks


def _lazy_sites(d: Diagram, kind: str, rng: random.Random):
    """Pick one site of ``kind`` without enumerating all variants.

    Returns None when no site of this kind exists.  Insertions choose
    an anchor first, then a variant valid there, which weights anchors
    uniformly rather than (anchor, variant) pairs; for fuzzing purposes
    only determinism matters.
    """
    if kind == "R1-":
        cands = _monogon_crossings(d)
        return MoveSite("R1-", (rng.choice(cands),)) if cands else None
    if kind == "R2-":
        cands = _bigon_pairs(d)
        return MoveSite("R2-", rng.choice(cands)) if cands else None
    if kind == "R3":
        cands = _triangle_sites(d)
        return rng.choice(cands) if cands else None
    if kind == "R1+":
        edges = _insertion_edges(d)
        if not edges:
            return None
        return MoveSite("R1+", (rng.choice(edges),), rng.choice(_R1_VARIANTS))
    if kind == "R2+":
        pairs = _r2_candidate_pairs(d)
        if not pairs:
            return None
        pair = rng.choice(pairs)
        valid = []
        for v in _R2_VARIANTS:
            site = MoveSite("R2+", pair, v)
            try:
                if is_realizable(_apply_r2_plus(d, site)):
                    valid.append(site)
            except InvalidSiteError:
                pass
        return rng.choice(valid) if valid else None
    raise DomainError(f"unknown move kind {kind!r}")


def random_walk(d: Diagram, plan: WalkPlan) -> Diagram:
    """Apply ``plan.steps`` random legal moves; deterministic in the seed.

    A step whose drawn kind has no site on the current diagram is
    consumed without changing the diagram.
    """
    if not is_realizable(d):
        raise NonPlanarError("random walks need a genus-0 start")
    weights = plan.effective_weights()
    kinds = sorted(weights)
    rng = random.Random(plan.seed)
    cur = d
    for _ in range(plan.steps):
        kind = rng.choices(kinds, [weights[k] for k in kinds])[0]
        site = _lazy_sites(cur, kind, rng)
        if site is None:
            continue
        cur = apply(cur, site)
    return cur
