"""Singular knots, chord diagrams, and finite-order invariant checks.

A singular diagram is a knot diagram with a subset of its crossings
marked as rigid double points.  Resolving every double point positively
or negatively and summing with alternating signs extends any knot
invariant to singular knots; the chord diagram sigma(s) records only
the interleaving pattern of the double points along the curve.  An
invariant of order <= n induces a well-defined function on n-chord
diagrams (its symbol), which must vanish on diagrams with an isolated
chord (1T) and satisfy the four-term relation (4T).

Chord diagrams are cyclic words: 2n letters, each of n letters twice.
The canonical form renames letters by first occurrence and takes the
lexicographically least rotation; the circle is oriented, so no
reflection is taken.

``realize`` builds an actual singular knot for a chord word: put the
double points on a jittered circle, run a short straight *through
segment* across each visit, and join consecutive visits by straight
connectors.  The resulting closed polygon is an honest plane curve, so
reading its self-intersections off as crossings (double points keep
sign +1; incidental crossings are over on first visit) yields a valid
genus-zero diagram whose marked subword is the requested cyclic word.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Callable, Mapping, Union

from .codes import OVER, UNDER, Diagram, Pass, is_realizable
from .errors import DegeneracyError, DomainError, GenericityFailure
from .moves import crossing_change
from .spatial import cross2, segment_crossing_2d, _sub, _norm


@dataclass(frozen=True)
class ChordDiagram:
    """A cyclic pairing word in canonical form."""

    word: str

    def __init__(self, word):
        object.__setattr__(self, "word", canonical_word(word))

    def __len__(self):
        return len(self.word) // 2

    def __str__(self):
        return self.word


def _validate_word(word: str):
    counts = {}
    for ch in word:
        counts[ch] = counts.get(ch, 0) + 1
    if any(v != 2 for v in counts.values()):
        raise DomainError(f"every chord letter must appear exactly twice: {word!r}")
    return word


def canonical_word(word) -> str:
    """Least rotation after renaming letters by first occurrence."""
    seq = [str(ch) for ch in word]
    _validate_word(seq)
    if not seq:
        return ""
    best = None
    for r in range(len(seq)):
        rot = seq[r:] + seq[:r]
        names = {}
        out = []
        for ch in rot:
            if ch not in names:
                names[ch] = str(len(names) + 1)
            out.append(names[ch])
        cand = "".join(out)
        if best is None or cand < best:
            best = cand
    return best


def enumerate_chord_diagrams(n: int):
    """All distinct n-chord diagrams, canonical and sorted."""
    if not 0 <= n <= 6:
        raise DomainError("chord enumeration supported for 0 <= n <= 6")
    points = list(range(2 * n))
    found = set()

    def matchings(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for k in range(1, len(rest)):
            b = rest[k]
            tail = rest[1:k] + rest[k + 1 :]
            for m in matchings(tail):
                yield [(a, b)] + m

    for m in matchings(points):
        letters = [""] * (2 * n)
        for idx, (a, b) in enumerate(m):
            letters[a] = letters[b] = str(idx + 1)
        found.add(ChordDiagram("".join(letters)))
    return tuple(sorted(found, key=lambda cd: cd.word))


@dataclass(frozen=True)
class SingularDiagram:
    """A knot diagram with some crossings marked as double points."""

    base: Diagram
    doubles: frozenset

    def __init__(self, base: Diagram, doubles):
        if base.n_components != 1:
            raise DomainError("singular diagrams are built on knot diagrams")
        doubles = frozenset(doubles)
        if not doubles <= set(base.signs):
            raise DomainError("marked double points must be crossings of the base")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "doubles", doubles)


def sigma(s: SingularDiagram) -> ChordDiagram:
    """Chord diagram of the double points along the traversal."""
    word = [
        str(p.crossing)
        for p in s.base.components[0]
        if p.crossing in s.doubles
    ]
    return ChordDiagram(word)


def _resolved(base: Diagram, c: int, target_sign: int) -> Diagram:
    return base if base.signs[c] == target_sign else crossing_change(base, c)


def resolutions(s: SingularDiagram):
    """The 2^m resolved diagrams with parity = number of minus choices."""
    doubles = sorted(s.doubles)
    out = []
    for choice in itertools.product((1, -1), repeat=len(doubles)):
        d = s.base
        for c, target in zip(doubles, choice):
            d = _resolved(d, c, target)
        out.append((d, sum(1 for t in choice if t < 0)))
    return tuple(out)


def extend(inv: Callable[[Diagram], int], s: SingularDiagram):
    """Alternating-sum extension of a knot invariant to singular knots."""
    return sum((-1) ** parity * inv(d) for d, parity in resolutions(s))


# ----------------------------------------------------------------------
# Realizing a chord word as a singular knot


def realize(word, seed: int = 0) -> SingularDiagram:
    """A singular knot diagram whose chord diagram is ``word``.

    Args:
        word: chord word (string or ChordDiagram); letters may be any
            hashable symbols, each appearing twice.
        seed: jitter seed; different seeds give different incidental
            crossings around the same marked pattern.

    Returns:
        SingularDiagram with doubles labelled 1..n in first-occurrence
        order of the word and all double-point signs +1.

    Raises:
        GenericityFailure: if jittering cannot reach a generic polygon
            (does not happen for words of supported size in practice).
    """
    if isinstance(word, ChordDiagram):
        word = word.word
    word = canonical_word(word)
    n = len(word) // 2
    if n == 0:
        return SingularDiagram(Diagram(((),)), ())
    letters = sorted(set(word), key=word.index)
    letter_id = {ch: i + 1 for i, ch in enumerate(letters)}
    rng = random.Random(seed)
    for _ in range(64):
        try:
            return _realize_once(word, letter_id, rng)
        except DegeneracyError:
            continue
    raise GenericityFailure(f"could not realize {word!r} generically")


def _realize_once(word, letter_id, rng):
    n = len(letter_id)
    two_n = len(word)
    # Double points on a jittered circle.
    spot = {}
    for i, ch in enumerate(sorted(letter_id, key=letter_id.get)):
        ang = 2 * math.pi * i / n + rng.uniform(-0.2, 0.2)
        rad = 1.0 + rng.uniform(-0.1, 0.1)
        spot[ch] = (rad * math.cos(ang), rad * math.sin(ang))
    # A short through segment across the double point for each visit.
    half = 0.3 / max(1, n - 1) + 0.08
    verts = []
    for t, ch in enumerate(word):
        q = spot[ch]
        ang = rng.uniform(0, 2 * math.pi)
        d = (math.cos(ang), math.sin(ang))
        verts.append((q[0] - half * d[0], q[1] - half * d[1]))
        verts.append((q[0] + half * d[0], q[1] + half * d[1]))
    # Polygon segments: even index = through segment of visit k,
    # odd index = connector from visit k to visit k+1.
    segs = []
    for k in range(two_n):
        segs.append((verts[2 * k], verts[2 * k + 1]))
        segs.append((verts[2 * k + 1], verts[(2 * k + 2) % len(verts)]))
    # No marked point may sit on a foreign segment.
    for ch, q in spot.items():
        for si, (p1, p2) in enumerate(segs):
            if si % 2 == 0 and word[si // 2] == ch:
                continue
            if _point_segment_distance(q, p1, p2) < 0.02:
                raise DegeneracyError("marked point near a foreign segment")
    # All transversal crossings.
    hits = {}
    points = []
    for i in range(len(segs)):
        for j in range(i + 2, len(segs)):
            if i == 0 and j == len(segs) - 1:
                continue  # cyclically adjacent
            got = segment_crossing_2d(*segs[i], *segs[j])
            if got is None:
                continue
            t, u = got
            p1, p2 = segs[i]
            pt = (p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1]))
            points.append(pt)
            hits[(i, j)] = (t, u)
    for x in range(len(points)):
        for y in range(x + 1, len(points)):
            if _norm(_sub(points[x], points[y])) <= 1e-7:
                raise DegeneracyError("coincident crossings")
    # Marked double points: the two through segments of a letter must
    # cross (at the marked point, necessarily).
    visits = {}
    for t, ch in enumerate(word):
        visits.setdefault(ch, []).append(2 * t)  # through-segment index
    for ch, (s1, s2) in visits.items():
        if (s1, s2) not in hits:
            raise DegeneracyError(f"through segments of {ch!r} missed")
    marked = {tuple(v): ch for ch, v in visits.items()}
    # Walk the polygon; first event of a pair fixes visit order.
    events = {}
    for (i, j), (t, u) in hits.items():
        events.setdefault(i, []).append((t, (i, j)))
        events.setdefault(j, []).append((u, (i, j)))
    order = []
    seen = set()
    for si in range(len(segs)):
        for t, pair in sorted(events.get(si, ())):
            if pair not in seen:
                seen.add(pair)
                order.append(pair)
    label = {}
    next_extra = n + 1
    for pair in order:
        if pair in marked:
            label[pair] = letter_id[marked[pair]]
        else:
            label[pair] = next_extra
            next_extra += 1
    # Roles: double points get whichever visit order realizes sign +1;
    # incidental crossings are over on first visit, sign from geometry.
    first_of = {}
    for si in range(len(segs)):
        for t, pair in sorted(events.get(si, ())):
            if pair not in first_of:
                first_of[pair] = si
    role_of = {}  # (pair, segment) -> role
    sign_of = {}
    for pair in order:
        i, j = pair
        di = _sub(segs[i][1], segs[i][0])
        dj = _sub(segs[j][1], segs[j][0])
        first = first_of[pair]
        second = j if first == i else i
        dfirst = di if first == i else dj
        dsecond = dj if first == i else di
        det = cross2(dfirst, dsecond)
        if pair in marked:
            # Choose the over strand so det(over, under) > 0.
            over_seg = first if det > 0 else second
            sign_of[pair] = 1
        else:
            over_seg = first
            sign_of[pair] = 1 if det > 0 else -1
        role_of[(pair, over_seg)] = OVER
        role_of[(pair, second if over_seg == first else first)] = UNDER
    passes = []
    for si in range(len(segs)):
        for t, pair in sorted(events.get(si, ())):
            passes.append(Pass(label[pair], role_of[(pair, si)], sign_of[pair]))
    base = Diagram((tuple(passes),))
    if not is_realizable(base):
        raise AssertionError("polygon trace produced a non-planar code")
    s = SingularDiagram(base, range(1, n + 1))
    if sigma(s) != ChordDiagram(word):
        raise AssertionError("realized chord word drifted")
    return s


def _point_segment_distance(q, p1, p2):
    d = _sub(p2, p1)
    dd = d[0] * d[0] + d[1] * d[1]
    if dd <= 1e-300:
        return _norm(_sub(q, p1))
    t = max(0.0, min(1.0, ((q[0] - p1[0]) * d[0] + (q[1] - p1[1]) * d[1]) / dd))
    proj = (p1[0] + t * d[0], p1[1] + t * d[1])
    return _norm(_sub(q, proj))


# ----------------------------------------------------------------------
# 1T / 4T and symbols

Lambda = Union[Mapping, Callable[[ChordDiagram], int]]


def _as_function(lam: Lambda):
    if callable(lam):
        return lam
    return lambda cd: lam[cd]


def has_isolated_chord(cd: ChordDiagram) -> bool:
    w = cd.word
    return any(w[k] == w[(k + 1) % len(w)] for k in range(len(w)))


def check_1t(lam: Lambda, n: int) -> bool:
    """Whether ``lam`` vanishes on all n-chord diagrams with an
    isolated chord (two cyclically adjacent endpoints)."""
    f = _as_function(lam)
    return all(
        f(cd) == 0 for cd in enumerate_chord_diagrams(n) if has_isolated_chord(cd)
    )


def check_4t(lam: Lambda, n: int) -> bool:
    """The four-term relation over all skeletons of n-chord diagrams.

    Fix a partial cyclic word with chord A present once; for each other
    chord B at positions q1, q2 insert A's second endpoint just
    before/after each and require

        lam(before q1) - lam(after q1) + lam(before q2) - lam(after q2) = 0.
    """
    if n < 2:
        return True
    f = _as_function(lam)
    mobile = "A"
    others = [str(i + 1) for i in range(n - 1)]
    letters = others * 2 + [mobile]
    for w in set(itertools.permutations(letters)):
        for b in others:
            q1 = w.index(b)
            q2 = w.index(b, q1 + 1)
            total = 0
            for slot, sg in ((q1, 1), (q1 + 1, -1), (q2, 1), (q2 + 1, -1)):
                full = list(w)
                full.insert(slot, mobile)
                total += sg * f(ChordDiagram(full))
            if total != 0:
                return False
    return True


def symbol(inv: Callable[[Diagram], int], n: int, samples: int = 20, seed: int = 0):
    """Evaluate ``extend(inv)`` per n-chord diagram over realizations.

    Args:
        inv: knot-diagram invariant.
        n: number of double points.
        samples: independent realizations per chord diagram.
        seed: base seed; realization k of diagram i uses a derived seed.

    Returns:
        (values, consistent): mapping ChordDiagram -> value from the
        first realization, and True iff every class was single-valued
        across its samples.
    """
    values = {}
    consistent = True
    for i, cd in enumerate(enumerate_chord_diagrams(n)):
        seen = []
        for k in range(samples):
            s = realize(cd, seed=seed + 1009 * i + k)
            seen.append(extend(inv, s))
        values[cd] = seen[0]
        if any(v != seen[0] for v in seen):
            consistent = False
    return values, consistent
