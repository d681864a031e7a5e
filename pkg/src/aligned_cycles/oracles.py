"""Exhaustive ground truth for small graphs.

Nothing here imports the constructive modules: alignment, disjointness and
connectivity are re-derived from their definitions so the oracles can judge
the algorithms without sharing their bugs. Searches are exact; when a budget
runs out they raise :class:`BudgetExceeded` instead of answering.
"""

from __future__ import annotations

import time
from dataclasses import dataclass


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 12
    max_millis: int = 60_000

    def __post_init__(self):
        if self.max_n <= 0 or self.max_millis <= 0:
            raise ValueError("budget caps must be positive")

    @classmethod
    def for_tuples(cls, max_millis: int = 60_000) -> "OracleBudget":
        return cls(max_n=9, max_millis=max_millis)


class _Clock:
    def __init__(self, budget):
        self.deadline = time.monotonic() + budget.max_millis / 1000
        self.ticks = 0

    def tick(self):
        self.ticks += 1
        if self.ticks & 1023 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("wall-clock budget exhausted")


def _check_size(g, budget):
    if g.n > budget.max_n:
        raise BudgetExceeded(f"n={g.n} exceeds oracle cap {budget.max_n}")


def _adjacency(g):
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


# ---------------------------------------------------------------------------
# Longest cycle


def brute_longest_cycle(g, budget: OracleBudget = OracleBudget()):
    """Exact longest cycle length and one witness, or ``(0, None)`` if acyclic.

    Each cycle is enumerated from its smallest vertex only, using bitmasks
    for the visited set.
    """
    _check_size(g, budget)
    clock = _Clock(budget)
    n = g.n
    nbr_mask = [0] * n
    for u, v in g.edges:
        nbr_mask[u] |= 1 << v
        nbr_mask[v] |= 1 << u
    best_len, best = 0, None
    for start in range(n):
        if best_len == n:
            break
        allowed = ~((1 << (start + 1)) - 1)  # vertices > start
        # remaining vertices > start bound the achievable length
        if best_len >= n - start:
            break
        stack = [(start, 1 << start, [start])]
        while stack:
            clock.tick()
            v, seen, walk = stack.pop()
            if len(walk) >= 3 and nbr_mask[v] >> start & 1 and len(walk) > best_len:
                best_len, best = len(walk), list(walk)
                if best_len == n:
                    break
            free = nbr_mask[v] & allowed & ~seen
            while free:
                low = free & -free
                w = low.bit_length() - 1
                free ^= low
                stack.append((w, seen | low, walk + [w]))
    return best_len, (tuple(best) if best else None)


# ---------------------------------------------------------------------------
# Aligned disjoint tuples


def aligned_by_definition(base, candidate) -> bool:
    """Pairwise check: every common ``u`` before ``v`` in base is before ``v`` in candidate."""
    base, candidate = list(base), list(candidate)
    common = [v for v in base if v in candidate]
    for a in range(len(common)):
        for b in range(a + 1, len(common)):
            if candidate.index(common[a]) > candidate.index(common[b]):
                return False
    return True


def internally_disjoint(p, q) -> bool:
    """Every shared vertex is an end of both paths, and the paths differ."""
    if list(p) == list(q):
        return False
    ends = {p[0], p[-1]} & {q[0], q[-1]}
    return set(p) & set(q) <= ends


def _simple_paths(adj, x, t, blocked, base, clock):
    """All simple ``x,t``-paths avoiding ``blocked`` whose every prefix is aligned with ``base``."""
    if x == t:
        yield (x,)
        return
    stack = [(x,)]
    while stack:
        clock.tick()
        p = stack.pop()
        for w in sorted(adj[p[-1]], reverse=True):
            if w in p or (w in blocked and w != t):
                continue
            q = p + (w,)
            # a misordered prefix stays misordered under extension
            if not aligned_by_definition(base, q):
                continue
            if w == t:
                yield q
            else:
                stack.append(q)


def aligned_tuple_exists(g, base, x, terminals, budget: OracleBudget = OracleBudget.for_tuples()):
    return find_aligned_tuple(g, base, x, terminals, budget) is not None


def find_aligned_tuple(g, base, x, terminals, budget: OracleBudget = OracleBudget.for_tuples()):
    """Witness tuple of pairwise internally disjoint aligned paths, one per terminal, or ``None``."""
    _check_size(g, budget)
    terminals = list(terminals)
    if not terminals:
        raise ValueError("terminals must be nonempty")
    base = tuple(base)
    if base[0] != x:
        raise ValueError("base must start at x")
    adj = _adjacency(g)
    clock = _Clock(budget)

    def place(k, chosen):
        if k == len(terminals):
            return list(chosen)
        t = terminals[k]
        # vertices already used, other than x and endpoints shared with t
        blocked = set()
        for q in chosen:
            blocked.update(q)
        blocked.discard(x)
        for q in _simple_paths(adj, x, t, blocked, base, clock):
            if all(internally_disjoint(q, r) for r in chosen):
                found = place(k + 1, chosen + [q])
                if found is not None:
                    return found
        return None

    return place(0, [])


def max_aligned_disjoint_paths(g, base, budget: OracleBudget = OracleBudget.for_tuples()) -> int:
    """Largest ``t`` with ``t`` internally disjoint ``x,y``-paths all aligned with ``base``."""
    base = tuple(base)
    x, y = base[0], base[-1]
    adj = _adjacency(g)
    lo, hi = 1, min(len(adj[x]), len(adj[y]))
    if not aligned_tuple_exists(g, base, x, [y], budget):
        return 0
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if aligned_tuple_exists(g, base, x, [y] * mid, budget):
            lo = mid
        else:
            hi = mid - 1
    return lo


# ---------------------------------------------------------------------------
# Connectivity by deletion


def _components(adj, removed):
    seen = set(removed)
    count = 0
    for s in range(len(adj)):
        if s in seen:
            continue
        count += 1
        seen.add(s)
        todo = [s]
        while todo:
            v = todo.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
    return count


def brute_cut_vertices(g) -> frozenset:
    adj = _adjacency(g)
    base = _components(adj, ())
    return frozenset(v for v in range(g.n) if _components(adj, (v,)) > base)


def brute_two_connected(g) -> bool:
    adj = _adjacency(g)
    return g.n >= 3 and _components(adj, ()) == 1 and all(
        _components(adj, (v,)) == 1 for v in range(g.n))


def brute_aligned_pair_ok(g, base, z, p1, p2) -> bool:
    """Independent check of an aligned pair: endpoints, edges, alignment, disjointness."""
    base, p1, p2 = list(base), list(p1), list(p2)
    x, y = base[0], base[-1]
    for p in (p1, p2):
        if len(set(p)) != len(p) or p[0] != x:
            return False
        if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
        if not aligned_by_definition(base, p):
            return False
    if p1[-1] != z or p2[-1] != y:
        return False
    return internally_disjoint(p1, p2)
