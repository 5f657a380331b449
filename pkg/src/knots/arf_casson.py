"""Skew pairs of crossings; Arf and Casson invariants of knot diagrams.

Walk a knot diagram from a basepoint and write down each crossing twice
(once per pass).  An unordered pair of crossings {A, B} is *skew* when
its four passes interleave as

    over A, under B, under A, over B

for one of the two orderings of the pair.  The Arf invariant is the
parity of the number of skew pairs; the Casson invariant weights each
skew pair by the product of its two crossing signs and sums.  Both are
independent of the basepoint and of traversal direction, which the test
suite checks exhaustively on small diagrams.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .codes import OVER, UNDER, Basepoint, Diagram
from .errors import DomainError, NotAKnotError


class SkewPair(NamedTuple):
    """A skew pair (a, b), ordered so the walk meets 'over a' first."""

    a: int
    b: int
    sign: int  # product of the two crossing signs


def _knot_component(d: Diagram):
    if d.n_components != 1:
        raise NotAKnotError(
            f"{d.n_components}-component diagram; skew pairs need a knot"
        )
    return d.components[0]


def skew_pairs(d: Diagram, p: Optional[Basepoint] = None):
    """All skew pairs of a knot diagram read from basepoint ``p``.

    Args:
        d: a one-component diagram.
        p: where to start reading; pass k of the component.  Defaults
            to the serialization start.

    Returns:
        Tuple of SkewPair, one per skew unordered pair, ordered by the
        walk position of the first 'over' pass.

    Raises:
        NotAKnotError: if ``d`` has several components.
        DomainError: if the basepoint is off-component.
    """
    comp = _knot_component(d)
    if p is None:
        p = Basepoint(0, 0)
    if p.component != 0:
        raise DomainError(f"basepoint on component {p.component} of a knot")
    m = len(comp)
    if m == 0:
        return ()
    start = p.position % m
    position = {}  # (crossing, role) -> walk index
    for t in range(m):
        q = comp[(start + t) % m]
        position[(q.crossing, q.role)] = t
    out = []
    labels = sorted(d.signs)
    for x in range(len(labels)):
        for y in range(x + 1, len(labels)):
            a, b = labels[x], labels[y]
            events = sorted(
                ((position[(c, r)], c, r) for c in (a, b) for r in (OVER, UNDER))
            )
            word = tuple((c, r) for _, c, r in events)
            for first, second in ((a, b), (b, a)):
                if word == (
                    (first, OVER),
                    (second, UNDER),
                    (first, UNDER),
                    (second, OVER),
                ):
                    out.append(
                        SkewPair(first, second, d.signs[a] * d.signs[b])
                    )
                    break
    out.sort(key=lambda sp: position[(sp.a, OVER)])
    return tuple(out)


def arf(d: Diagram) -> int:
    """Parity of the number of skew pairs (0 or 1)."""
    return len(skew_pairs(d)) % 2


def casson(d: Diagram) -> int:
    """Sum of sign products over all skew pairs."""
    return sum(sp.sign for sp in skew_pairs(d))
