"""Spatial polygonal links, generic projection, and the two point-set
theorems: six points in general position span a pair of linked
triangles, and the complete graph on seven points contains a knotted
Hamiltonian cycle (detected through the Arf invariant).

All geometry is done with orientation predicates (2x2 and 3x3 signed
determinants) guarded by a relative tolerance; configurations too close
to degenerate raise instead of guessing.  Projections choose a seeded
random viewing direction and retry until the shadow is generic: no
collapsed segments, no vertex on a foreign segment, all crossings
transversal and simple.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .arf_casson import arf
from .codes import OVER, UNDER, Diagram, Pass, genus, is_realizable
from .errors import DegeneracyError, DomainError, GenericityFailure

EPSILON = 1e-9
MAX_RETRIES = 64


# ----------------------------------------------------------------------
# Vector helpers (plain tuples; the scale is a handful of points)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _norm(a):
    return math.sqrt(_dot(a, a))


def cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def orient2d(a, b, c):
    """Twice the signed area of triangle abc."""
    return cross2(_sub(b, a), _sub(c, a))


def orient3d(a, b, c, d):
    """Six times the signed volume of tetrahedron abcd."""
    u, v, w = _sub(b, a), _sub(c, a), _sub(d, a)
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def _orient3d_checked(a, b, c, d):
    """orient3d with a relative degeneracy guard."""
    val = orient3d(a, b, c, d)
    scale = _norm(_sub(b, a)) * _norm(_sub(c, a)) * _norm(_sub(d, a))
    if abs(val) <= EPSILON * max(scale, 1.0):
        raise DegeneracyError("four points are coplanar within tolerance")
    return 1 if val > 0 else -1


def segment_crossing_2d(p1, p2, q1, q2):
    """Transversal interior intersection of two 2D segments.

    Returns (t, u) parameters along p and q, or None when the segments
    do not cross.  Raises DegeneracyError for near-parallel overlap or
    crossings too close to an endpoint, so callers can re-jitter.
    """
    d1, d2 = _sub(p2, p1), _sub(q2, q1)
    denom = cross2(d1, d2)
    scale = max(_norm(d1) * _norm(d2), 1e-300)
    if abs(denom) <= EPSILON * scale:
        # Parallel: degenerate only if the supporting lines overlap
        # near the segments.
        gap = cross2(d1, _sub(q1, p1))
        if abs(gap) <= EPSILON * max(_norm(d1) * _norm(_sub(q1, p1)), scale):
            lo1, hi1 = sorted((0.0, _dot(d1, d1)))
            s1 = _dot(_sub(q1, p1), d1)
            s2 = _dot(_sub(q2, p1), d1)
            if max(min(s1, s2), lo1) <= min(max(s1, s2), hi1):
                raise DegeneracyError("collinear overlapping segments")
        return None
    r = _sub(q1, p1)
    t = cross2(r, d2) / denom
    u = cross2(r, d1) / denom
    margin = 1e-7
    if -margin < t < margin or 1 - margin < t < 1 + margin:
        if -2 * margin < u < 1 + 2 * margin:
            raise DegeneracyError("crossing at a segment endpoint")
    if -margin < u < margin or 1 - margin < u < 1 + margin:
        if -2 * margin < t < 1 + 2 * margin:
            raise DegeneracyError("crossing at a segment endpoint")
    if margin < t < 1 - margin and margin < u < 1 - margin:
        return t, u
    return None


# ----------------------------------------------------------------------
# Spatial links and projection


@dataclass(frozen=True)
class SpatialLink:
    """Closed 3D polygonal components (tuples of float triples)."""

    components: tuple

    def __init__(self, components):
        comps = tuple(tuple(tuple(float(x) for x in v) for v in comp) for comp in components)
        for comp in comps:
            if len(comp) < 3:
                raise DomainError("a closed polygonal component needs >= 3 vertices")
            for k, v in enumerate(comp):
                if _norm(_sub(v, comp[k - 1])) <= EPSILON:
                    raise DomainError("consecutive vertices coincide")
        _check_disjoint(comps)
        object.__setattr__(self, "components", comps)


def _seg_distance_3d(p1, p2, q1, q2):
    """Distance between two 3D segments (standard closest-point clamp)."""
    d1, d2, r = _sub(p2, p1), _sub(q2, q1), _sub(p1, q1)
    a, e, f = _dot(d1, d1), _dot(d2, d2), _dot(d2, r)
    b, c = _dot(d1, d2), _dot(d1, r)
    denom = a * e - b * b
    s = max(0.0, min(1.0, (b * f - c * e) / denom)) if denom > 1e-300 else 0.0
    t = (b * s + f) / e if e > 1e-300 else 0.0
    t = max(0.0, min(1.0, t))
    s = max(0.0, min(1.0, (b * t - c) / a)) if a > 1e-300 else 0.0
    diff = _sub(
        tuple(p + s * d for p, d in zip(p1, d1)),
        tuple(q + t * d for q, d in zip(q1, d2)),
    )
    return _norm(diff)


def _check_disjoint(comps):
    scale = 1.0
    for comp in comps:
        for v in comp:
            scale = max(scale, max(abs(x) for x in v))
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            for a in range(len(comps[i])):
                for b in range(len(comps[j])):
                    p1, p2 = comps[i][a - 1], comps[i][a]
                    q1, q2 = comps[j][b - 1], comps[j][b]
                    if _seg_distance_3d(p1, p2, q1, q2) <= EPSILON * scale:
                        raise DomainError("components touch within tolerance")


@dataclass(frozen=True)
class ProjectionResult:
    diagram: Diagram
    direction: tuple
    perturbation_seed: int


def _random_direction(rng):
    while True:
        v = (rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1))
        n = _norm(v)
        if n > 1e-6:
            return tuple(x / n for x in v)


def _frame(w):
    """Right-handed orthonormal (u, v, w)."""
    pick = (1.0, 0.0, 0.0) if abs(w[0]) < 0.9 else (0.0, 1.0, 0.0)
    u = (
        w[1] * pick[2] - w[2] * pick[1],
        w[2] * pick[0] - w[0] * pick[2],
        w[0] * pick[1] - w[1] * pick[0],
    )
    nu = _norm(u)
    u = tuple(x / nu for x in u)
    v = (
        w[1] * u[2] - w[2] * u[1],
        w[2] * u[0] - w[0] * u[2],
        w[0] * u[1] - w[1] * u[0],
    )
    return u, v, w


class _Shadow:
    """One component-wise 2D projection with depths."""

    def __init__(self, comps3d, direction):
        u, v, w = _frame(direction)
        self.flat = [
            [( _dot(p, u), _dot(p, v)) for p in comp] for comp in comps3d
        ]
        self.depth = [[_dot(p, w) for p in comp] for comp in comps3d]

    def segments(self):
        for ci, comp in enumerate(self.flat):
            for k in range(len(comp)):
                yield (ci, k)

    def seg_points(self, seg):
        ci, k = seg
        comp = self.flat[ci]
        return comp[k - 1], comp[k]

    def seg_depths(self, seg):
        ci, k = seg
        dep = self.depth[ci]
        return dep[k - 1], dep[k]


def _adjacent(seg_a, seg_b, sizes):
    """Whether two segments of one component share an endpoint."""
    (ca, ka), (cb, kb) = seg_a, seg_b
    if ca != cb:
        return False
    m = sizes[ca]
    return ka == kb or (ka - kb) % m == 1 or (kb - ka) % m == 1


def _shadow_crossings(shadow):
    """All transversal crossings of the shadow, checked for simplicity."""
    sizes = [len(c) for c in shadow.flat]
    segs = list(shadow.segments())
    crossings = []
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            a, b = segs[i], segs[j]
            if _adjacent(a, b, sizes):
                continue
            p1, p2 = shadow.seg_points(a)
            q1, q2 = shadow.seg_points(b)
            hit = segment_crossing_2d(p1, p2, q1, q2)
            if hit is None:
                continue
            t, u = hit
            point = (p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1]))
            crossings.append((a, b, t, u, point))
    # No two crossings may coincide (triple points collapse there).
    for x in range(len(crossings)):
        for y in range(x + 1, len(crossings)):
            px, py = crossings[x][4], crossings[y][4]
            if _norm(_sub(px, py)) <= 1e-7:
                raise DegeneracyError("two crossings coincide")
    return crossings


def _diagram_from_shadow(shadow, crossings):
    """Assemble the Gauss code from per-segment crossing events."""
    events = {}  # seg -> list of (param, crossing_index)
    for idx, (a, b, t, u, _pt) in enumerate(crossings):
        events.setdefault(a, []).append((t, idx))
        events.setdefault(b, []).append((u, idx))
    over_of = {}
    sign_of = {}
    for idx, (a, b, t, u, _pt) in enumerate(crossings):
        da1, da2 = shadow.seg_depths(a)
        db1, db2 = shadow.seg_depths(b)
        depth_a = da1 + t * (da2 - da1)
        depth_b = db1 + u * (db2 - db1)
        if abs(depth_a - depth_b) <= 1e-9:
            raise DegeneracyError("strands touch in space at a crossing")
        over_of[idx] = a if depth_a > depth_b else b
        pa1, pa2 = shadow.seg_points(a)
        pb1, pb2 = shadow.seg_points(b)
        dir_a, dir_b = _sub(pa2, pa1), _sub(pb2, pb1)
        over_dir, under_dir = (
            (dir_a, dir_b) if over_of[idx] == a else (dir_b, dir_a)
        )
        area = cross2(over_dir, under_dir)
        if abs(area) <= EPSILON * max(_norm(over_dir) * _norm(under_dir), 1e-300):
            raise DegeneracyError("tangential crossing")
        sign_of[idx] = 1 if area > 0 else -1
    components = []
    for ci, comp in enumerate(shadow.flat):
        passes = []
        for k in range(len(comp)):
            seg = (ci, k)
            for t, idx in sorted(events.get(seg, ())):
                role = OVER if over_of[idx] == seg else UNDER
                passes.append(Pass(idx + 1, role, sign_of[idx]))
        components.append(tuple(passes))
    return Diagram(components)


def project(link: SpatialLink, seed: int = 0) -> ProjectionResult:
    """Generic diagram of ``link`` seen along a seeded random direction.

    Retries fresh directions until the shadow is generic, up to
    MAX_RETRIES, then gives up with GenericityFailure.
    """
    rng = random.Random(seed)
    last = None
    for _ in range(MAX_RETRIES):
        direction = _random_direction(rng)
        shadow = _Shadow(link.components, direction)
        try:
            crossings = _shadow_crossings(shadow)
            diagram = _diagram_from_shadow(shadow, crossings)
        except DegeneracyError as exc:
            last = exc
            continue
        if not is_realizable(diagram):
            # A correct generic shadow is always planar; treat as a
            # tolerance artifact and try another direction.
            last = DegeneracyError(f"non-planar shadow {genus(diagram)}")
            continue
        return ProjectionResult(diagram, direction, seed)
    raise GenericityFailure(f"no generic direction after {MAX_RETRIES} tries: {last}")


# ----------------------------------------------------------------------
# Linked triangles


def _require_triangle(t):
    pts = tuple(tuple(float(x) for x in p) for p in t)
    if len(pts) != 3:
        raise DomainError("a triangle needs exactly 3 points")
    return pts


def triangles_linked(t1, t2) -> int:
    """1 when the triangles are linked, 0 when not.

    Counts, mod 2, the crossings of t2's boundary through the open disk
    spanned by t1.  Raises DegeneracyError when any four of the six
    vertices are coplanar within tolerance.
    """
    t1, t2 = _require_triangle(t1), _require_triangle(t2)
    pts = t1 + t2
    for quad in itertools.combinations(range(6), 4):
        _orient3d_checked(*(pts[i] for i in quad))
    a, b, c = t1
    hits = 0
    for k in range(3):
        p, q = t2[k - 1], t2[k]
        if _orient3d_checked(a, b, c, p) == _orient3d_checked(a, b, c, q):
            continue
        s1 = _orient3d_checked(p, q, a, b)
        s2 = _orient3d_checked(p, q, b, c)
        s3 = _orient3d_checked(p, q, c, a)
        if s1 == s2 == s3:
            hits += 1
    return hits % 2


def _check_points(points, n):
    pts = tuple(tuple(float(x) for x in p) for p in points)
    if len(pts) != n:
        raise DomainError(f"need exactly {n} points")
    for quad in itertools.combinations(range(n), 4):
        _orient3d_checked(*(pts[i] for i in quad))
    return pts


def verify_six_points(points):
    """A linked pair of triangles with vertices at the 6 given points.

    Returns (triple1, triple2) of point indices.  Existence is the
    linked-triangles theorem; not finding one on generic input would be
    a bug, reported as AssertionError rather than silently ignored.
    """
    pts = _check_points(points, 6)
    rest = [i for i in range(1, 6)]
    for pair in itertools.combinations(rest, 2):
        first = (0,) + pair
        second = tuple(i for i in range(6) if i not in first)
        if triangles_linked([pts[i] for i in first], [pts[i] for i in second]):
            return first, second
    raise AssertionError("no linked triangle pair on generic six points")


# ----------------------------------------------------------------------
# Seven points: knotted Hamiltonian cycle


def _pair_table(pts, seed):
    """Shared projection of all 21 segments on 7 points.

    Returns (reversed-safe crossing table, direction).  Table entry for
    segment pair (e, f), e < f as sorted vertex pairs: (t_e, t_f, over,
    sign) for canonical (low->high) orientations of both segments.
    """
    rng = random.Random(seed)
    edges = list(itertools.combinations(range(7), 2))
    last = None
    for _ in range(MAX_RETRIES):
        direction = _random_direction(rng)
        u, v, w = _frame(direction)
        flat = [(_dot(p, u), _dot(p, v)) for p in pts]
        depth = [_dot(p, w) for p in pts]
        try:
            table = {}
            seen_points = []
            for e, f in itertools.combinations(edges, 2):
                if set(e) & set(f):
                    continue
                p1, p2 = flat[e[0]], flat[e[1]]
                q1, q2 = flat[f[0]], flat[f[1]]
                hit = segment_crossing_2d(p1, p2, q1, q2)
                if hit is None:
                    continue
                t, uu = hit
                de = depth[e[0]] + t * (depth[e[1]] - depth[e[0]])
                df = depth[f[0]] + uu * (depth[f[1]] - depth[f[0]])
                if abs(de - df) <= 1e-9:
                    raise DegeneracyError("equal depths at a crossing")
                dir_e = _sub(p2, p1)
                dir_f = _sub(q2, q1)
                over = e if de > df else f
                od, ud = (dir_e, dir_f) if over == e else (dir_f, dir_e)
                sign = 1 if cross2(od, ud) > 0 else -1
                pt = (p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1]))
                seen_points.append(pt)
                table[(e, f)] = (t, uu, over, sign)
            for x in range(len(seen_points)):
                for y in range(x + 1, len(seen_points)):
                    if _norm(_sub(seen_points[x], seen_points[y])) <= 1e-7:
                        raise DegeneracyError("coincident crossings")
        except DegeneracyError as exc:
            last = exc
            continue
        return table, direction
    raise GenericityFailure(f"no generic direction after {MAX_RETRIES} tries: {last}")


def _cycle_diagram(cycle, table):
    """Gauss code of one Hamiltonian cycle from the shared table."""
    n = len(cycle)
    oriented = []  # (canonical edge, reversed?)
    for k in range(n):
        a, b = cycle[k], cycle[(k + 1) % n]
        oriented.append(((min(a, b), max(a, b)), a > b))
    in_cycle = {edge: (pos, rev) for pos, (edge, rev) in enumerate(oriented)}
    events = [[] for _ in range(n)]
    labels = {}
    for (e, f), (t, u, over, sign) in table.items():
        if e not in in_cycle or f not in in_cycle:
            continue
        label = len(labels) + 1
        labels[(e, f)] = label
        pos_e, rev_e = in_cycle[e]
        pos_f, rev_f = in_cycle[f]
        true_sign = sign * (-1 if rev_e else 1) * (-1 if rev_f else 1)
        te = 1 - t if rev_e else t
        tf = 1 - u if rev_f else u
        events[pos_e].append((te, label, OVER if over == e else UNDER, true_sign))
        events[pos_f].append((tf, label, OVER if over == f else UNDER, true_sign))
    passes = []
    for pos in range(n):
        for t, label, role, sign in sorted(events[pos]):
            passes.append(Pass(label, role, sign))
    return Diagram((tuple(passes),))


def verify_seven_points(points, seed: int = 0):
    """Scan all 360 Hamiltonian cycles on 7 points for a knotted one.

    Projects the seven points once along a seeded generic direction,
    then assembles each cycle's diagram from the shared crossing table
    and computes its Arf invariant.

    Returns:
        (witness, parity): the first cycle (vertex order) whose
        projected diagram has arf = 1, or None if none does, and the
        sum of all 360 arf values mod 2.
    """
    pts = _check_points(points, 7)
    table, _direction = _pair_table(pts, seed)
    witness = None
    total = 0
    for tail in itertools.permutations(range(1, 7)):
        if tail[0] > tail[-1]:
            continue  # each cycle once, not once per direction
        cycle = (0,) + tail
        diagram = _cycle_diagram(cycle, table)
        value = arf(diagram)
        total += value
        if value and witness is None:
            witness = cycle
    return witness, total % 2
