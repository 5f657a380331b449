"""Conway polynomial by skein recursion.

The recursion rewrites a diagram toward a *descending* one: traverse
the components in order, each from a basepoint, and ask that the first
visit to every crossing be an over pass.  Descending diagrams are
unknotted (one component) or split trivial (several), so their
polynomial is 1 or 0.  Otherwise take the first crossing A whose first
visit is an under pass:

    C(K+) - C(K-) = t * C(K0)

solved for the diagram at hand: changing A removes exactly that
violation (no other crossing's first-visit role moves), and smoothing A
drops a crossing, so the recursion terminates.  Results are memoized on
the relabelled Gauss code; the memo only ever caches diagrams that are
isomorphic up to crossing labels, so correctness does not depend on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .codes import OVER, Basepoint, Diagram, canonical_key
from .errors import DomainError
from .moves import crossing_change, smooth


@dataclass(frozen=True)
class ConwayPoly:
    """Integer polynomial c0 + c1 t + c2 t^2 + ... with trimmed tail."""

    coeffs: tuple

    def __init__(self, coeffs: Sequence[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        return self.coeffs[n] if n < len(self.coeffs) else 0

    def __add__(self, other):
        size = max(len(self.coeffs), len(other.coeffs))
        return ConwayPoly([self[i] + other[i] for i in range(size)])

    def __sub__(self, other):
        size = max(len(self.coeffs), len(other.coeffs))
        return ConwayPoly([self[i] - other[i] for i in range(size)])

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return ConwayPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ConwayPoly(out)

    def shifted(self) -> "ConwayPoly":
        """Multiplication by t."""
        if not self.coeffs:
            return self
        return ConwayPoly((0,) + self.coeffs)

    def __str__(self):
        return poly_text(self)

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


ONE = ConwayPoly((1,))
ZERO = ConwayPoly()


def poly_text(p: ConwayPoly) -> str:
    """Readable text form, e.g. ``1 + 3t^2 + t^4`` or ``1 - t^2``."""
    if not p.coeffs:
        return "0"
    terms = []
    for n, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if n == 0:
            body = str(mag)
        else:
            power = "t" if n == 1 else f"t^{n}"
            body = power if mag == 1 else f"{mag}{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(terms)


@dataclass(frozen=True)
class DescendingPlan:
    """Traversal recipe: component order and one basepoint for each.

    ``None`` fields mean the canonical choice — components in stored
    order, each starting at its pass 0.
    """

    component_order: Optional[tuple] = None
    base: Optional[tuple] = None

    def resolve(self, d: Diagram):
        order = (
            tuple(range(d.n_components))
            if self.component_order is None
            else tuple(self.component_order)
        )
        if sorted(order) != list(range(d.n_components)):
            raise DomainError(f"bad component order {order!r}")
        if self.base is None:
            bases = tuple(Basepoint(ci, 0) for ci in range(d.n_components))
        else:
            bases = tuple(Basepoint(*b) for b in self.base)
            if len(bases) != d.n_components:
                raise DomainError("need one basepoint per component")
            for ci, bp in enumerate(bases):
                if bp.component != ci:
                    raise DomainError("basepoint list must follow component index")
        return order, bases


CANONICAL = DescendingPlan()


def _traversal(d: Diagram, plan: DescendingPlan):
    """Passes in plan order: components as ordered, each from its base."""
    order, bases = plan.resolve(d)
    for ci in order:
        comp = d.components[ci]
        if not comp:
            continue
        start = bases[ci].position % len(comp)
        for t in range(len(comp)):
            yield comp[(start + t) % len(comp)]


def violations(d: Diagram, plan: DescendingPlan = CANONICAL):
    """Crossings whose first visit is an under pass, in visit order."""
    seen = set()
    out = []
    for p in _traversal(d, plan):
        if p.crossing in seen:
            continue
        seen.add(p.crossing)
        if p.role != OVER:
            out.append(p.crossing)
    return tuple(out)


def first_violation(d: Diagram, plan: DescendingPlan = CANONICAL):
    """The first under-first crossing, or None when descending."""
    vio = violations(d, plan)
    return vio[0] if vio else None


def is_descending(d: Diagram, plan: DescendingPlan = CANONICAL) -> bool:
    """True when every crossing is met on top first (see module doc)."""
    return not violations(d, plan)


def unknotting_changes(d: Diagram, plan: DescendingPlan = CANONICAL):
    """The crossings to change to make ``d`` descending under ``plan``.

    Changing a crossing is the only way to alter its first-visit role,
    so this set is the unique minimal one.
    """
    return violations(d, plan)


_memo: dict = {}


def _conway_canonical(d: Diagram) -> ConwayPoly:
    key = canonical_key(d)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    vio = violations(d)
    if not vio:
        value = ONE if d.n_components == 1 else ZERO
    else:
        a = vio[0]
        changed = _conway_canonical(crossing_change(d, a))
        smoothed = _conway_canonical(smooth(d, a))
        if d.signs[a] > 0:
            # d is K+: C(K+) = C(K-) + t C(K0)
            value = changed + smoothed.shifted()
        else:
            value = changed - smoothed.shifted()
    _memo[key] = value
    return value


def conway(d: Diagram, plan: Optional[DescendingPlan] = None) -> ConwayPoly:
    """Conway polynomial of the diagram.

    Args:
        d: any diagram.
        plan: optional traversal plan for the root step; the result does
            not depend on it (a tested property of the invariant).

    Returns:
        ConwayPoly with integer coefficients.
    """
    if plan is None or (plan.component_order is None and plan.base is None):
        return _conway_canonical(d)
    vio = violations(d, plan)
    if not vio:
        return ONE if d.n_components == 1 else ZERO
    a = vio[0]
    changed = conway(crossing_change(d, a), plan)
    smoothed = _conway_canonical(smooth(d, a))
    if d.signs[a] > 0:
        return changed + smoothed.shifted()
    return changed - smoothed.shifted()


def coefficient(d: Diagram, n: int) -> int:
    """c_n of the Conway polynomial; c_{-1} is 0 by convention."""
    if n < -1:
        raise DomainError(f"no coefficient c_{n}")
    if n == -1:
        return 0
    return conway(d)[n]
