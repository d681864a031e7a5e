#!/usr/bin/env python3
"""How many internally disjoint x,y-paths aligned with a base path exist?

In a 2-connected graph the answer is always at least 2. For 3-connected
graphs Menger gives three disjoint x,y-paths, but not necessarily three
aligned ones. This samples random 3-connected graphs, takes every base path
from vertex 0, and tabulates the maximum number of aligned paths.
"""

import argparse
import collections
import itertools
import random

from aligned_cycles.generators import random_two_connected
from aligned_cycles.oracles import max_aligned_disjoint_paths


def three_connected(g):
    for a, b in itertools.combinations(range(g.n), 2):
        rest = [v for v in range(g.n) if v not in (a, b)]
        seen, todo = {rest[0]}, [rest[0]]
        while todo:
            v = todo.pop()
            for w in g.adj[v]:
                if w not in seen and w not in (a, b):
                    seen.add(w)
                    todo.append(w)
        if len(seen) < len(rest):
            return False
    return True


def paths_from(g, x):
    stack = [(x,)]
    while stack:
        p = stack.pop()
        if len(p) >= 2:
            yield p
        stack.extend(p + (w,) for w in g.adj[p[-1]] if w not in p)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=7)
    parser.add_argument("--graphs", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    n = args.n
    table = collections.Counter()
    witnesses = []
    found = 0
    while found < args.graphs:
        m = rng.randint(3 * n // 2 + 1, n * (n - 1) // 2)
        g = random_two_connected(n, m, rng.getrandbits(64))
        if g.min_degree() < 3 or not three_connected(g):
            continue
        found += 1
        for p in paths_from(g, 0):
            t = max_aligned_disjoint_paths(g, p)
            table[t] += 1
            if t < 3 and len(witnesses) < 3:
                witnesses.append((sorted(g.edges), p))

    print(f"{found} random 3-connected graphs on {n} vertices, all base paths from vertex 0")
    for t in sorted(table):
        print(f"  max aligned = {t}: {table[t]} paths")
    for edges, p in witnesses:
        print(f"example with fewer than 3: edges={edges} base={p}")


if __name__ == "__main__":
    main()
