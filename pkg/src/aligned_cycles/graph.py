"""Graph, path, cycle and lollipop types plus their validators.

Vertices are dense integer ids ``0..n-1``. Every type here is immutable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ContractError, GraphError, NoPathError, ParseError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset
    adj: tuple = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a simple graph, rejecting loops, repeats and out-of-range ids."""
        seen = set()
        nbrs = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} outside 0..{n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        adj = tuple(tuple(sorted(a)) for a in nbrs)
        return cls(n, frozenset(seen), adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def sorted_edges(self) -> list:
        return sorted(self.edges)


@dataclass(frozen=True)
class Path:
    """Ordered sequence of distinct vertices; a single vertex is allowed."""

    vertices: tuple

    def __init__(self, vertices: Sequence[int]):
        object.__setattr__(self, "vertices", tuple(vertices))
        if not self.vertices:
            raise GraphError("empty path")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError(f"repeated vertex in path {self.vertices}")

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    @property
    def origin(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def suffix_from(self, w: int) -> "Path":
        """The part of the path starting at ``w``."""
        return Path(self.vertices[self.vertices.index(w):])

    def segment(self, a: int, b: int) -> tuple:
        """Vertices from ``a`` to ``b`` inclusive, reversed if ``b`` precedes ``a``."""
        i, j = self.vertices.index(a), self.vertices.index(b)
        if i <= j:
            return self.vertices[i:j + 1]
        return self.vertices[j:i + 1][::-1]

    def reversed(self) -> "Path":
        return Path(self.vertices[::-1])


@dataclass(frozen=True)
class Cycle:
    vertices: tuple

    def __init__(self, vertices: Sequence[int]):
        object.__setattr__(self, "vertices", tuple(vertices))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def rotated_to_end(self, v: int) -> "Cycle":
        """Same cycle, relabelled so that ``v`` is the last vertex."""
        i = self.vertices.index(v)
        return Cycle(self.vertices[i + 1:] + self.vertices[:i + 1])


@dataclass(frozen=True)
class Lollipop:
    cycle: Cycle
    path: Path

    @property
    def tip(self) -> int:
        return self.path.end

    @property
    def ell(self) -> int:
        return len(self.path) - 1


class Verdict:
    """Boolean result that remembers why it failed."""

    __slots__ = ("ok", "reason")

    def __init__(self, ok: bool, reason: str = ""):
        self.ok = ok
        self.reason = reason

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"Verdict({self.ok}, {self.reason!r})"


OK = Verdict(True, "ok")


# ---------------------------------------------------------------------------
# Parsing, serialisation, DOT


def parse_graph(text: str, n: int | None = None) -> Graph:
    """Parse whitespace separated ``u v`` pairs, one edge per line.

    Blank lines and lines starting with ``#`` are skipped. The vertex count
    is ``1 + max id`` unless ``n`` is given.
    """
    edges = []
    seen = set()
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two vertex ids, got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"malformed token in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex id in {line!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
        top = max(top, u, v)
    if n is None:
        n = top + 1
    elif n <= top:
        raise ParseError(f"vertex id {top} out of range for n={n}")
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.sorted_edges())


def to_dot(g: Graph, cycle: Cycle | None = None, path: Path | None = None) -> str:
    """Render ``g`` as Graphviz DOT, drawing cycle edges red and path edges blue."""
    marked = {}
    if path is not None:
        for a, b in zip(path.vertices, path.vertices[1:]):
            marked[(min(a, b), max(a, b))] = "blue"
    if cycle is not None:
        vs = cycle.vertices
        for a, b in zip(vs, vs[1:] + vs[:1]):
            marked[(min(a, b), max(a, b))] = "red"
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n))
    for u, v in g.sorted_edges():
        colour = marked.get((u, v))
        style = f' [color={colour}, penwidth=2]' if colour else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Validation


def verify_path(g: Graph, p: Path | Sequence[int]) -> Verdict:
    vs = tuple(p)
    if not vs:
        return Verdict(False, "empty")
    if any(not 0 <= v < g.n for v in vs):
        return Verdict(False, "vertex out of range")
    if len(set(vs)) != len(vs):
        return Verdict(False, "repeated vertex")
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            return Verdict(False, f"missing edge {a}-{b}")
    return OK


def verify_cycle(g: Graph, c: Cycle | Sequence[int]) -> Verdict:
    vs = tuple(c)
    if len(vs) < 3:
        return Verdict(False, "fewer than 3 vertices")
    if any(not 0 <= v < g.n for v in vs):
        return Verdict(False, "vertex out of range")
    if len(set(vs)) != len(vs):
        return Verdict(False, "repeated vertex")
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            return Verdict(False, f"missing edge {a}-{b}")
    if not g.has_edge(vs[-1], vs[0]):
        return Verdict(False, f"missing closing edge {vs[-1]}-{vs[0]}")
    return OK


def verify_lollipop(g: Graph, lol: Lollipop) -> Verdict:
    v = verify_cycle(g, lol.cycle)
    if not v:
        return Verdict(False, f"cycle: {v.reason}")
    v = verify_path(g, lol.path)
    if not v:
        return Verdict(False, f"path: {v.reason}")
    shared = set(lol.cycle.vertices) & set(lol.path.vertices)
    if len(shared) != 1:
        return Verdict(False, f"cycle and path share {len(shared)} vertices")
    if lol.path.origin not in shared:
        return Verdict(False, "shared vertex is not the first vertex of the path")
    return OK


def is_aligned(base: Path | Sequence[int], candidate: Path | Sequence[int]) -> bool:
    """True iff the common vertices appear in the same relative order in both paths.

    Both paths must start at the same vertex. Runs in linear time: the common
    vertices, read in candidate order, must have increasing positions in base.
    """
    base, candidate = tuple(base), tuple(candidate)
    if base[0] != candidate[0]:
        raise ContractError(f"paths have different origins {base[0]} and {candidate[0]}")
    pos = {v: i for i, v in enumerate(base)}
    last = -1
    for v in candidate:
        i = pos.get(v)
        if i is None:
            continue
        if i < last:
            return False
        last = i
    return True


# ---------------------------------------------------------------------------
# Breadth-first search with deterministic tie breaking


def _bfs(g, source, is_target, blocked=frozenset(), blocked_edge=None, counter=None):
    """Shortest path from ``source`` to the nearest vertex satisfying ``is_target``.

    Neighbours are scanned in increasing id order and the search stops at the
    first target discovered, so target vertices are never interior to the
    result. Returns ``None`` when nothing is reachable.
    """
    if is_target(source):
        return (source,)
    parent = {source: None}
    queue = deque([source])
    if blocked_edge is not None:
        be = (min(blocked_edge), max(blocked_edge))
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if counter is not None:
                counter[0] += 1
            if w in parent or w in blocked:
                continue
            if blocked_edge is not None and (min(u, w), max(u, w)) == be:
                continue
            parent[w] = u
            if is_target(w):
                out = [w]
                while parent[out[-1]] is not None:
                    out.append(parent[out[-1]])
                return tuple(reversed(out))
            queue.append(w)
    return None


def shortest_path(g: Graph, s: int, t: int, avoid=frozenset(), avoid_edge=None, counter=None) -> Path:
    """Shortest ``s,t``-path avoiding the given vertices and (optionally) one edge."""
    vs = _bfs(g, s, lambda v: v == t, frozenset(avoid), avoid_edge, counter)
    if vs is None:
        raise NoPathError(f"no path from {s} to {t}")
    return Path(vs)
