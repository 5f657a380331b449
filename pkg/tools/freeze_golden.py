#!/usr/bin/env python3
"""Recompute golden invariant values for the catalog data files.

Reads every src/knots/catalog/data/*.txt, computes the invariant suite
appropriate to its component count, and rewrites data/golden.json in
the canonical listing order.  Run after editing a catalog code; commit
the regenerated sidecar together with the code change.
"""

import json
from pathlib import Path

from knots import arf, casson, conway, count_colorings, from_text, lk, lk2

DATA = Path(__file__).resolve().parent.parent / "src" / "knots" / "catalog" / "data"

# Canonical listing order: knots, then links.
ORDER = [
    "unknot",
    "trefoil-r",
    "trefoil-l",
    "fig8",
    "5_1",
    "hopf+",
    "hopf-",
    "whitehead",
    "borromean",
]


def golden_for(d):
    out = {"conway": list(conway(d).coeffs)}
    if d.n_components == 1:
        out["casson"] = casson(d)
        out["arf"] = arf(d)
    else:
        n = d.n_components
        out["lk2"] = [
            [lk2(d, i, j) if i != j else 0 for j in range(n)] for i in range(n)
        ]
        out["lk"] = [
            [lk(d, i, j) if i != j else 0 for j in range(n)] for i in range(n)
        ]
    out["colorings"] = {}
    for p in (3, 5):
        c = count_colorings(d, p)
        out["colorings"][str(p)] = [c.total, c.proper]
    return out


def main():
    stems = {p.stem for p in DATA.glob("*.txt")}
    missing = [n for n in ORDER if n not in stems]
    extra = sorted(stems - set(ORDER))
    if missing:
        raise SystemExit(f"data files missing for: {missing}")
    table = {}
    for name in ORDER + extra:
        d = from_text((DATA / f"{name}.txt").read_text())
        table[name] = golden_for(d)
        print(f"{name:12s} {table[name]}")
    (DATA / "golden.json").write_text(json.dumps(table, indent=2) + "\n")
    print(f"\nwrote {DATA / 'golden.json'}")


if __name__ == "__main__":
    main()
