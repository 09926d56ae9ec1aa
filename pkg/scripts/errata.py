"""Tabulate every closed form that disagrees with direct computation.

Covers the topological-index formulas, the independence number formula and the
claim that integral spectra occur only for powers of two.
"""

import argparse
from collections import Counter

from gengraph import indices as ix
from gengraph import invariants as inv
from gengraph.graph import build_delta
from gengraph.numtheory import is_power_of_two
from gengraph.spectra import integrality_check, perron_pair


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--indices-to", type=int, default=100)
    ap.add_argument("--independence-to", type=int, default=30)
    ap.add_argument("--integrality-to", type=int, default=1000)
    args = ap.parse_args()

    bad = ix.errata_report(range(2, args.indices_to + 1))
    print(f"index formulas, 2..{args.indices_to}: {len(bad)} disagreements")
    for (name, variant), count in sorted(Counter((r.index_name, r.variant) for r in bad).items()):
        first = next(r for r in bad if (r.index_name, r.variant) == (name, variant))
        print(f"  {name:11s} {variant:13s} {count:3d} n   first n={first.n}: "
              f"formula {ix._fmt(first.closed_form)} vs brute {ix._fmt(first.brute_force)}")
    print(f"  derived Gutman identity holds on all: "
          f"{all(ix.brute_indices(n)['Gutman'] == ix.gutman_derived(n) for n in range(2, args.indices_to + 1))}")

    print(f"\nindependence number, 2..{args.independence_to}:")
    for n in range(2, args.independence_to + 1):
        exact = inv.max_independent_set_bitset(build_delta(n).bitsets())
        if exact != inv.independence_number(n):
            print(f"  n={n}: formula {inv.independence_number(n)}, exhaustive {exact}, "
                  f"max(n/p1, phi) = {inv.independence_number_corrected(n)}")

    extra = [n for n in range(2, args.integrality_to + 1) if integrality_check(n) and not is_power_of_two(n)]
    print(f"\nintegral spectra with n not a power of two, n <= {args.integrality_to}: {len(extra)}")
    for n in extra[:8]:
        lo, hi = perron_pair(n)
        print(f"  n={n}: quadratic roots {lo}, {hi}")


if __name__ == "__main__":
    main()
