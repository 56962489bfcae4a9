#!/usr/bin/env python3
"""Survey the small one-component diagram classes.

For each chord count up to the bound, enumerate the isomorphism classes and
tabulate: how many are R2-irreducible, all-even, all-odd, irreducibly odd,
and how the state-sum lower bound distributes.  Diagrams whose bound equals
their size are certified minimal.

Usage: python scripts/survey_small_diagrams.py [--max-chords N]
"""

import argparse
import collections
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from freeknot.analysis import lower_bound_knot  # noqa: E402
from freeknot.diagrams import enumerate_codes, to_framed  # noqa: E402
from freeknot.moves import find_r2  # noqa: E402
from freeknot.parity import gaussian_parity, is_irreducibly_odd  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-chords", type=int, default=5)
    args = ap.parse_args()

    print(f"{'n':>2} {'classes':>8} {'irred':>6} {'even':>6} {'odd':>6} {'irr-odd':>8}  bound histogram (tight*)")
    for n in range(0, args.max_chords + 1):
        classes = enumerate_codes(n, 1)
        irred = all_even = all_odd = irr_odd = 0
        bounds = collections.Counter()
        for can in classes:
            c = can.code()
            if not find_r2(to_framed(c)):
                irred += 1
            par = gaussian_parity(c)
            all_even += par.all_even()
            all_odd += bool(par.chords) and par.all_odd()
            irr_odd += is_irreducibly_odd(c)
            cert = lower_bound_knot(c)
            bounds[(cert.bound, cert.tight)] += 1
        hist = "  ".join(
            f"{b}{'*' if tight else ''}:{count}"
            for (b, tight), count in sorted(bounds.items())
        )
        print(f"{n:>2} {len(classes):>8} {irred:>6} {all_even:>6} {all_odd:>6} {irr_odd:>8}  {hist}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
