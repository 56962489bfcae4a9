#!/usr/bin/env python3
"""Regenerate the shipped minimality fixtures.

Scans the 40320 normal forms "x 1..8 x <permutation>" for a 9-chord
one-component diagram with all chords even, a unique chord interlacing all
others, and a well-behaved two-component split (8 crossings, all
inter-component, R2-irreducible, source-sink orientable).  Writes the first
hit and its split to src/freeknot/fixtures/{k1,l1}.gauss.

Usage: python scripts/find_fixtures.py [--all]
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from freeknot.analysis import search_minimal_fixtures  # noqa: E402
from freeknot.diagrams import canonicalize, render_gauss_code  # noqa: E402

HEADER_K1 = """\
# Minimal 9-crossing one-component fixture.
# Constraint set: one component; 9 chords; every chord even (interlacement
# degree); exactly one chord interlaced with all 8 others; diagram
# R2-irreducible; the two-component smoothing at that chord is 8-vertex,
# R2-irreducible, fully inter-component, and source-sink orientable.
# Search space: the 8! = 40320 normal forms "x 1..8 x <permutation>"
# (every diagram meeting the constraints relabels into this family).
# Regenerate with scripts/find_fixtures.py.
"""

HEADER_L1 = """\
# Minimal 8-crossing two-component fixture: the split of k1.gauss at its
# unique fully-interlaced chord.  All crossings are inter-component, the
# diagram is R2-irreducible and source-sink orientable.
# Regenerate with scripts/find_fixtures.py.
"""


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--all", action="store_true", help="report every hit instead of the first")
    args = ap.parse_args()

    hits = search_minimal_fixtures(limit=None if args.all else 1)
    if not hits:
        print("no diagram satisfies the constraint set", file=sys.stderr)
        return 1
    print(f"{len(hits)} hit(s)")
    for k1, l1 in hits:
        print("  knot:", render_gauss_code(k1), "| canonical:", canonicalize(k1))
        print("  link:", render_gauss_code(l1), "| canonical:", canonicalize(l1))

    k1, l1 = hits[0]
    fixdir = pathlib.Path(__file__).resolve().parents[1] / "src" / "freeknot" / "fixtures"
    fixdir.mkdir(parents=True, exist_ok=True)
    (fixdir / "k1.gauss").write_text(HEADER_K1 + render_gauss_code(k1) + "\n")
    (fixdir / "l1.gauss").write_text(HEADER_L1 + render_gauss_code(l1) + "\n")
    print(f"wrote {fixdir / 'k1.gauss'} and {fixdir / 'l1.gauss'}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
