"""Named graph families and seeded random 2-connected graphs."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .graph import Graph

FAMILIES = {
    "cycle": ("n",),
    "complete": ("n",),
    "complete_bipartite": ("a", "b"),
    "theta": ("a", "b", "c"),
    "random_2conn": ("n", "m"),
}


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {sorted(FAMILIES)}")
        missing = set(FAMILIES[self.family]) - set(self.params)
        extra = set(self.params) - set(FAMILIES[self.family])
        if missing or extra:
            raise ValueError(f"{self.family} takes parameters {FAMILIES[self.family]}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs a, b >= 1")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def theta_graph(a: int, b: int, c: int) -> Graph:
    """Three internally disjoint paths between 0 and 1 with a, b, c inner vertices.

    At most one of the three may be zero (a direct edge).
    """
    lengths = (a, b, c)
    if min(lengths) < 0 or sorted(lengths)[1] < 1:
        raise ValueError("theta needs non-negative lengths with at most one zero")
    edges = []
    nxt = 2
    for k in lengths:
        prev = 0
        for _ in range(k):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


def wheel_graph(n: int) -> Graph:
    """Hub 0 joined to a rim cycle on ``1..n-1`` (``n`` vertices in total)."""
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph.from_edges(n, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def random_two_connected(n: int, m: int, seed: int) -> Graph:
    """Random 2-connected graph with exactly ``n`` vertices and ``m`` edges.

    Built as an ear decomposition: a random cycle, then open ears carrying
    the remaining vertices, then chords between non-adjacent vertices.
    Vertex labels are shuffled at the end.
    """
    if n < 3:
        raise ValueError("random_2conn needs n >= 3")
    if not n <= m <= n * (n - 1) // 2:
        raise ValueError(f"random_2conn needs n <= m <= n(n-1)/2, got n={n}, m={m}")
    rng = random.Random(seed)
    extra = m - n
    if extra == 0:
        ears = 0
    else:
        ears = rng.randint(0, min(extra, n - 3))
    if ears == 0:
        c0 = n
    else:
        c0 = rng.randint(3, n - ears)
    edges = set()
    for i in range(c0):
        a, b = i, (i + 1) % c0
        edges.add((min(a, b), max(a, b)))
    # split the n - c0 new vertices into `ears` positive parts
    if ears:
        cuts = sorted(rng.sample(range(1, n - c0), ears - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [n - c0])]
    else:
        sizes = []
    nxt = c0
    for size in sizes:
        s, t = rng.sample(range(nxt), 2)
        prev = s
        for _ in range(size):
            edges.add((prev, nxt))
            prev = nxt
            nxt += 1
        edges.add((min(prev, t), max(prev, t)))
    while len(edges) < m:
        s, t = rng.sample(range(n), 2)
        key = (min(s, t), max(s, t))
        if key not in edges:
            edges.add(key)
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, sorted((perm[u], perm[v]) for u, v in sorted(edges)))


def generate(spec: GenSpec) -> Graph:
    p = spec.params
    if spec.family == "cycle":
        return cycle_graph(p["n"])
    if spec.family == "complete":
        return complete_graph(p["n"])
    if spec.family == "complete_bipartite":
        return complete_bipartite(p["a"], p["b"])
    if spec.family == "theta":
        return theta_graph(p["a"], p["b"], p["c"])
    return random_two_connected(p["n"], p["m"], spec.seed)


def random_corpus(count: int, seed: int, max_n: int = 30, min_n: int = 3):
    """``count`` random 2-connected graphs with ``n <= max_n`` and ``m <= 2n``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        m = rng.randint(n, min(2 * n, n * (n - 1) // 2))
        out.append(random_two_connected(n, m, rng.getrandbits(64)))
    return out


# name -> (builder, delta, longest cycle length). Values were computed by
# brute_longest_cycle and are re-checked in the test suite.
CATALOG = {
    "triangle": (lambda: cycle_graph(3), 2, 3),
    "C5": (lambda: cycle_graph(5), 2, 5),
    "C6": (lambda: cycle_graph(6), 2, 6),
    "C7": (lambda: cycle_graph(7), 2, 7),
    "C8": (lambda: cycle_graph(8), 2, 8),
    "C9": (lambda: cycle_graph(9), 2, 9),
    "K4": (lambda: complete_graph(4), 3, 4),
    "K5": (lambda: complete_graph(5), 4, 5),
    "K2_3": (lambda: complete_bipartite(2, 3), 2, 4),
    "K2_5": (lambda: complete_bipartite(2, 5), 2, 4),
    "K3_3": (lambda: complete_bipartite(3, 3), 3, 6),
    "K3_4": (lambda: complete_bipartite(3, 4), 3, 6),
    "petersen": (petersen_graph, 3, 9),
    "W6": (lambda: wheel_graph(6), 3, 6),
    "theta_1_1_1": (lambda: theta_graph(1, 1, 1), 2, 4),
    "theta_0_2_3": (lambda: theta_graph(0, 2, 3), 2, 7),
    "theta_2_2_2": (lambda: theta_graph(2, 2, 2), 2, 6),
    "theta_1_3_4": (lambda: theta_graph(1, 3, 4), 2, 9),
}


def catalog_graph(name: str) -> Graph:
    return CATALOG[name][0]()
