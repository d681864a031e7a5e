"""Cut vertices, 2-connectivity, and pairs of internally disjoint paths."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError, ProofViolation
from .graph import Graph, Path, shortest_path, verify_path


@dataclass(frozen=True)
class ConnectivityReport:
    connected: bool
    cut_vertices: frozenset
    two_connected: bool


def analyze(g: Graph) -> ConnectivityReport:
    """Connectivity and articulation points via an iterative lowpoint DFS."""
    n = g.n
    if n < 1:
        raise ContractError("graph has no vertices")
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    timer = 0
    components = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        components += 1
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # frames: (vertex, parent, next neighbour index)
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, parent, i = frame
            nbrs = g.adj[v]
            if i < len(nbrs):
                frame[2] += 1
                w = nbrs[i]
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append([w, v, 0])
                elif w != parent:
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    connected = components == 1
    return ConnectivityReport(
        connected=connected,
        cut_vertices=frozenset(cuts),
        two_connected=connected and not cuts and n >= 3,
    )


def require_two_connected(g: Graph) -> None:
    if g.n < 3 or not analyze(g).two_connected:
        raise ContractError("graph is not 2-connected")


def whitney_pair(g: Graph, u: int, v: int) -> tuple[Path, Path]:
    """Two internally disjoint ``u,v``-paths in a 2-connected graph.

    Takes any shortest ``u,v``-path as the base and asks the aligned-pair
    construction for an ``u,v``-path alongside it.
    """
    from .aligned import aligned_pair

    if u == v:
        raise ContractError("whitney_pair needs distinct endpoints")
    require_two_connected(g)
    base = shortest_path(g, u, v)
    pair = aligned_pair(g, base, v, check_input=False)
    p1, p2 = pair.p1, pair.p2
    ok = (
        verify_path(g, p1) and verify_path(g, p2)
        and p1.origin == p2.origin == u and p1.end == p2.end == v
        and set(p1) & set(p2) == {u, v}
        and p1 != p2
    )
    if not ok:
        raise ProofViolation(f"whitney_pair produced {p1.vertices} / {p2.vertices}", pair.trace)
    return p1, p2
