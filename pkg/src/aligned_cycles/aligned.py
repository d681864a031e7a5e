"""Internally disjoint path pairs aligned with a given path.

Given a 2-connected graph ``G``, an ``x,y``-path ``P`` and any vertex ``z``,
:func:`aligned_pair` returns an ``x,z``-path ``P1`` and an ``x,y``-path ``P2``
that share no vertex other than ``x`` (and ``y`` when ``z == y``), with both
paths aligned with ``P``: vertices common to ``P`` appear in ``P``'s order.

The construction peels ``P`` from the front. For ``P' = P`` minus its first
vertex ``v1`` a pair ``P1', P2'`` is known; if ``v1`` already lies on one of
them the pair is trimmed and the other path is extended by the edge
``v1 v2``; otherwise a shortest escape path from ``v1`` avoiding ``v2`` is
spliced onto one of them. The implementation works from the back of ``P``
forward, so no recursion is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .connectivity import require_two_connected
from .errors import ContractError, NoPathError, ProofViolation
from .graph import Graph, Path, _bfs, is_aligned, shortest_path, verify_path

DEGENERATE = "DEGENERATE"
BASE = "BASE"
CASE1 = "CASE1"
CASE2_ON_PATH = "CASE2_ON_PATH"
CASE2_ON_BASE = "CASE2_ON_BASE"


@dataclass(frozen=True)
class StepRecord:
    level: int
    x: int
    case: str
    which: int = 0
    escape: tuple = ()
    p1: tuple = ()
    p2: tuple = ()


@dataclass(frozen=True)
class AlignedPair:
    p1: Path
    p2: Path
    base: Path
    trace: tuple = field(default=(), compare=False, repr=False)
    work: int = field(default=0, compare=False, repr=False)


def escape_path(g: Graph, forbidden: int, source: int, targets, counter=None) -> Path:
    """Shortest path from ``source`` to ``targets`` in ``g - forbidden``.

    Only the final vertex belongs to ``targets``. Ties go to the smallest
    neighbour id.
    """
    targets = frozenset(targets)
    if forbidden == source:
        raise ContractError("source is the forbidden vertex")
    if not targets:
        raise ContractError("empty target set")
    if source in targets:
        raise ContractError("source lies in the target set")
    vs = _bfs(g, source, targets.__contains__, frozenset((forbidden,)), None, counter)
    if vs is None:
        raise NoPathError(f"targets unreachable from {source} without {forbidden}")
    return Path(vs)


def check_aligned_pair(g: Graph, base: Path, z: int, p1: Path, p2: Path) -> str | None:
    """Return a failure reason, or ``None`` if ``(p1, p2)`` is valid for ``(base, z)``."""
    x, y = base.origin, base.end
    for name, p in (("p1", p1), ("p2", p2)):
        v = verify_path(g, p)
        if not v:
            return f"{name} invalid: {v.reason}"
        if p.origin != x:
            return f"{name} does not start at {x}"
        if not is_aligned(base, p):
            return f"{name} not aligned with base"
    if p1.end != z:
        return f"p1 ends at {p1.end}, expected {z}"
    if p2.end != y:
        return f"p2 ends at {p2.end}, expected {y}"
    allowed = {x, y} if z == y else {x}
    common = set(p1) & set(p2)
    if common != allowed:
        return f"paths share {sorted(common)}, allowed {sorted(allowed)}"
    if z == y and p1 == p2:
        return "p1 and p2 coincide"
    return None


def aligned_pair(g: Graph, p: Path, z: int, check_input: bool = True) -> AlignedPair:
    """Aligned, internally disjoint ``x,z``- and ``x,y``-paths for ``p = x..y``.

    Raises :class:`ContractError` on bad input and :class:`ProofViolation`
    (with the step trace attached) if an intermediate pair ever fails the
    checker, which would be a bug.
    """
    p = p if isinstance(p, Path) else Path(p)
    if len(p) < 2:
        raise ContractError("base path needs at least two vertices")
    if not 0 <= z < g.n:
        raise ContractError(f"vertex {z} not in graph")
    if check_input:
        require_two_connected(g)
        v = verify_path(g, p)
        if not v:
            raise ContractError(f"base path invalid: {v.reason}")

    verts = p.vertices
    s = len(verts)
    counter = [0]
    trace = []

    # Deepest level that needs no recursion.
    kz = verts.index(z) if z in verts else -1
    if 0 <= kz <= s - 2:
        k = kz
        p1, p2 = [z], list(verts[k:])
        trace.append(StepRecord(k, verts[k], DEGENERATE, p1=tuple(p1), p2=tuple(p2)))
    else:
        k = s - 2
        x, y = verts[k], verts[k + 1]
        try:
            if z == y:
                q = shortest_path(g, x, y, avoid_edge=(x, y), counter=counter)
            else:
                q = shortest_path(g, x, z, avoid=(y,), counter=counter)
        except NoPathError as exc:
            raise ProofViolation(f"base case found no path: {exc}", trace) from None
        p1, p2 = list(q.vertices), [x, y]
        trace.append(StepRecord(k, x, BASE, p1=tuple(p1), p2=tuple(p2)))
    _check_level(g, verts[k:], z, p1, p2, trace)

    while k > 0:
        k -= 1
        v1, v2 = verts[k], verts[k + 1]
        paths = [p1, p2]
        hits = [v1 in q for q in paths]
        counter[0] += len(p1) + len(p2)
        if all(hits):
            raise ProofViolation(f"{v1} lies on both sub-paths; only possible when z == x", trace)
        if any(hits):
            i = hits.index(True)
            paths[i] = paths[i][paths[i].index(v1):]
            paths[1 - i] = [v1] + paths[1 - i]
            record = StepRecord(k, v1, CASE1, which=i + 1)
        else:
            on_paths = set(p1) | set(p2)
            targets = (set(verts[k:]) | on_paths) - {v1}
            counter[0] += len(targets)
            try:
                q = escape_path(g, v2, v1, targets, counter)
            except NoPathError:
                raise ProofViolation(f"no escape path from {v1} avoiding {v2}", trace) from None
            u = q.end
            if u in on_paths:
                i = 0 if u in p1 else 1
                tail = paths[i][paths[i].index(u):]
                paths[i] = list(q.vertices[:-1]) + tail
                case = CASE2_ON_PATH
            else:
                j = verts.index(u)
                jp = j
                while verts[jp] not in on_paths:
                    jp += 1
                w = verts[jp]
                i = 0 if w in p1 else 1
                tail = paths[i][paths[i].index(w):]
                paths[i] = list(q.vertices[:-1]) + list(verts[j:jp]) + tail
                case = CASE2_ON_BASE
            paths[1 - i] = [v1] + paths[1 - i]
            record = StepRecord(k, v1, case, which=i + 1, escape=q.vertices)
        p1, p2 = paths
        counter[0] += len(p1) + len(p2)
        trace.append(StepRecord(**{**record.__dict__, "p1": tuple(p1), "p2": tuple(p2)}))
        _check_level(g, verts[k:], z, p1, p2, trace)

    return AlignedPair(Path(p1), Path(p2), p, tuple(trace), counter[0])


def _check_level(g, sub, z, p1, p2, trace):
    try:
        reason = check_aligned_pair(g, Path(sub), z, Path(p1), Path(p2))
    except Exception as exc:  # malformed intermediate path
        reason = repr(exc)
    if reason is not None:
        raise ProofViolation(f"level {trace[-1].level}: {reason}", trace)
