#!/usr/bin/env python3
"""Run long_cycle over a seeded random corpus and summarise the traces.

Prints how often each improvement case fires, how far the emitted cycles
exceed min(n, 2*delta), and (for n <= 12) how close they get to the true
longest cycle.
"""

import argparse
import collections
import os
import statistics
import time

from aligned_cycles.generators import random_corpus
from aligned_cycles.long_cycle import long_cycle
from aligned_cycles.oracles import brute_longest_cycle


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument("--max-n", type=int, default=30)
    parser.add_argument("--seed", type=int, default=int(os.environ.get("ALIGNED_CYCLES_SEED", 0)))
    parser.add_argument("--exhaustive", action="store_true",
                        help="keep applying Case 1 after the bound is met")
    args = parser.parse_args()

    cases = collections.Counter()
    slack, gap = [], []
    start = time.perf_counter()
    for g in random_corpus(args.count, args.seed, max_n=args.max_n):
        cert = long_cycle(g, stop_at_bound=not args.exhaustive)
        cases.update(s.case_taken for s in cert.trace)
        slack.append(len(cert.cycle) - cert.bound)
        if g.n <= 12:
            gap.append(brute_longest_cycle(g)[0] - len(cert.cycle))
    elapsed = time.perf_counter() - start

    print(f"{args.count} graphs, n <= {args.max_n}, seed {args.seed}, {elapsed:.2f}s")
    for case, k in sorted(cases.items()):
        print(f"  {case:<18}{k:>7}")
    print(f"cycle - bound: mean {statistics.mean(slack):.2f}, max {max(slack)}")
    if gap:
        print(f"longest - cycle (n <= 12, {len(gap)} graphs): mean {statistics.mean(gap):.2f}, "
              f"max {max(gap)}, optimal in {sum(d == 0 for d in gap)}")


if __name__ == "__main__":
    main()
