"""Enumeration helpers and hypothesis strategies shared by the test modules."""

import itertools

from hypothesis import strategies as st

from aligned_cycles.generators import CATALOG, random_two_connected
from aligned_cycles.graph import Cycle, Graph, Lollipop, Path


def graph(n, edges):
    return Graph.from_edges(n, edges)


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


def simple_paths_from(g, x, max_len=None):
    """Every simple path with at least two vertices starting at ``x``."""
    stack = [(x,)]
    while stack:
        p = stack.pop()
        if len(p) >= 2:
            yield p
        if max_len is not None and len(p) >= max_len:
            continue
        for w in g.adj[p[-1]]:
            if w not in p:
                stack.append(p + (w,))


def tip_maximal_lollipops(g):
    """Every lollipop with a non-trivial path whose tip has no neighbour off it."""
    n = g.n
    for s in range(n):
        stack = [(s,)]
        while stack:
            p = stack.pop()
            if len(p) >= 3 and g.has_edge(p[-1], s) and p[1] < p[-1]:
                yield from _hang_all(g, p)
            for w in g.adj[p[-1]]:
                if w > s and w not in p:
                    stack.append(p + (w,))


def _hang_all(g, cyc):
    on_cycle = set(cyc)
    for r in range(len(cyc)):
        rc = cyc[r + 1:] + cyc[:r + 1]
        for labels in (rc, rc[:-1][::-1] + rc[-1:]):
            stack = [(labels[-1],)]
            while stack:
                p = stack.pop()
                used = on_cycle | set(p)
                ext = [w for w in g.adj[p[-1]] if w not in used]
                if not ext and len(p) >= 2:
                    yield Lollipop(Cycle(labels), Path(p))
                stack.extend(p + (w,) for w in ext)


CATALOG_SMALL = [name for name, (build, _, _) in CATALOG.items() if build().n <= 9]


@st.composite
def two_connected_graphs(draw, min_n=3, max_n=12):
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(n, min(2 * n, n * (n - 1) // 2)))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_two_connected(n, m, seed)
