#!/usr/bin/env python3
"""Recompute minimum degree and longest cycle for every catalog graph.

The values frozen in ``generators.CATALOG`` came from this script; run it
after editing the catalog and paste any changed rows back.
"""

from aligned_cycles.generators import CATALOG
from aligned_cycles.oracles import brute_longest_cycle


def main():
    print(f"{'name':<14}{'n':>4}{'m':>5}{'delta':>7}{'longest':>9}  frozen")
    for name, (build, delta, longest) in CATALOG.items():
        g = build()
        found, _ = brute_longest_cycle(g)
        status = "ok" if (g.min_degree(), found) == (delta, longest) else "MISMATCH"
        print(f"{name:<14}{g.n:>4}{g.m:>5}{g.min_degree():>7}{found:>9}  {status}")


if __name__ == "__main__":
    main()
