"""Cycles of length at least ``min(n, 2*delta)`` in 2-connected graphs.

A lollipop is a cycle ``C = v1..vc`` with a path ``P = u1..u_{l+1}`` hanging
off ``u1 = vc``. Starting from any lollipop, the path is grown until its tip
has no neighbour outside ``C`` and ``P``. If the cycle is still shorter than
the bound, the tip's neighbourhood always yields a strictly longer cycle:

* tip sees a cycle vertex other than ``vc``: splice the path into the cycle
  (sub-cases a, b, c of :func:`improve_case1`);
* tip sees only path vertices: take the aligned pair for
  ``P' = v1..vc,u2..u_{l+1}`` and close the walk described in
  :func:`improve_case2`.

The path is then discarded, a fresh lollipop is hung off the new cycle, and
the loop repeats. Each round lengthens the cycle, so at most ``n`` rounds run.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from .aligned import aligned_pair
from .connectivity import require_two_connected
from .errors import ContractError, ProofViolation
from .graph import Cycle, Graph, Lollipop, Path, Verdict, verify_cycle, verify_lollipop

GROW = "GROW"
CASE1A = "CASE1A"
CASE1B = "CASE1B"
CASE1C = "CASE1C"
CASE1_NONE = "CASE1_NONE"
CASE2_DEGENERATE = "CASE2_DEGENERATE"
CASE2 = "CASE2"

IMPROVING = (CASE1A, CASE1B, CASE1C, CASE2_DEGENERATE, CASE2)


@dataclass(frozen=True)
class ImprovementTrace:
    iteration: int
    case_taken: str
    cycle_len_before: int
    cycle_len_after: int
    path_len: int | None = None
    tip_degree: int | None = None
    z: int | None = None
    a1: int | None = None
    a2: int | None = None
    b1: int | None = None
    b2: int | None = None
    j: int | None = None
    j_prime: int | None = None
    arc: tuple | None = None
    p1: tuple | None = None
    p2: tuple | None = None

    def as_dict(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v)
                for k, v in asdict(self).items() if v is not None}


@dataclass(frozen=True)
class CycleCertificate:
    cycle: Cycle
    n: int
    delta: int
    bound: int
    trace: tuple = field(default=(), compare=False)

    @property
    def iterations(self) -> int:
        return sum(t.case_taken in IMPROVING for t in self.trace)

    def as_dict(self, with_trace: bool = False) -> dict:
        out = {
            "cycle": list(self.cycle.vertices),
            "n": self.n,
            "delta": self.delta,
            "bound": self.bound,
            "iterations": self.iterations,
        }
        if with_trace:
            out["trace"] = [t.as_dict() for t in self.trace]
        return out


# ---------------------------------------------------------------------------
# Lollipop construction


def _hang(g: Graph, cycle: Cycle) -> Lollipop:
    """Degenerate lollipop rooted at the smallest cycle vertex with an outside neighbour."""
    on_cycle = set(cycle.vertices)
    for v in sorted(on_cycle):
        if any(w not in on_cycle for w in g.adj[v]):
            return Lollipop(cycle.rotated_to_end(v), Path((v,)))
    return Lollipop(cycle, Path((cycle.vertices[-1],)))


def _dfs_cycle(g: Graph) -> Cycle:
    """First fundamental cycle met by a smallest-id-first DFS from vertex 0."""
    depth = {0: 0}
    stack = [0]
    iters = [iter(g.adj[0])]
    while stack:
        v = stack[-1]
        for w in iters[-1]:
            if w not in depth:
                depth[w] = len(stack)
                stack.append(w)
                iters.append(iter(g.adj[w]))
                break
            if len(stack) >= 2 and w == stack[-2]:
                continue
            if depth[w] < len(stack) and stack[depth[w]] == w:
                return Cycle(stack[depth[w]:])
        else:
            stack.pop()
            iters.pop()
    raise ContractError("graph is acyclic")


def initial_lollipop(g: Graph) -> Lollipop:
    return grow_path(g, _hang(g, _dfs_cycle(g)))


def grow_path(g: Graph, lol: Lollipop) -> Lollipop:
    """Extend the path until its tip has no neighbour off the lollipop.

    If the path is a single vertex that cannot move while the cycle misses
    some vertex, the lollipop is re-rooted at a cycle vertex that can.
    """
    cycle = lol.cycle
    path = list(lol.path.vertices)
    used = set(cycle.vertices) | set(path)
    while True:
        nxt = next((w for w in g.adj[path[-1]] if w not in used), None)
        if nxt is None:
            break
        path.append(nxt)
        used.add(nxt)
    if len(path) == 1 and len(cycle) < g.n:
        rooted = _hang(g, cycle)
        if rooted.path.origin != path[0]:
            return grow_path(g, rooted)
    return Lollipop(cycle, Path(path))


# ---------------------------------------------------------------------------
# Case 1: the tip sees the cycle


def _splice_front(cyc: tuple, path: tuple, idxs: list) -> tuple | None:
    # neighbour v_i with i <= l: cycle v_i..v_c, u_2..u_{l+1}
    ell = len(path) - 1
    for i in idxs:
        if i <= ell:
            return cyc[i - 1:] + path[1:]
    return None


def _case1(g: Graph, lol: Lollipop):
    cyc, path = lol.cycle.vertices, lol.path.vertices
    c, tip = len(cyc), path[-1]
    pos = {v: i for i, v in enumerate(cyc, start=1)}
    idxs = sorted(pos[w] for w in g.adj[tip] if w in pos and pos[w] != c)
    if not idxs:
        raise ContractError("tip has no neighbour on the cycle besides u1")
    out = _splice_front(cyc, path, idxs)
    if out is not None:
        return Cycle(out), CASE1A
    # mirror labels: v'_i = v_{c-i}, v'_c = v_c
    mirrored = cyc[:-1][::-1] + cyc[-1:]
    out = _splice_front(mirrored, path, sorted(c - i for i in idxs))
    if out is not None:
        return Cycle(out), CASE1B
    members = set(idxs)
    for i in idxs:
        if i + 1 in members and i + 1 < c:
            return Cycle(cyc[:i] + (tip,) + cyc[i:]), CASE1C
    return None


def improve_case1(g: Graph, lol: Lollipop) -> Cycle | None:
    """Longer cycle through the tip when the tip sees ``C - vc``, else ``None``.

    Tries, in order: (a) a neighbour ``v_i`` with ``i <= l``; (b) the mirror
    image, ``i >= c - l``; (c) two consecutive cycle neighbours.
    """
    _require_tip_maximal(g, lol)
    res = _case1(g, lol)
    return None if res is None else res[0]


# ---------------------------------------------------------------------------
# Case 2: the tip sees only the path


def _first_in(seq, members):
    return next(v for v in seq if v in members)


def _last_in(seq, members):
    return next(v for v in reversed(seq) if v in members)


def _case2(g: Graph, lol: Lollipop, iteration: int = 0, pair=None):
    cyc, path = lol.cycle.vertices, lol.path.vertices
    c, ell, tip = len(cyc), len(path) - 1, path[-1]
    upos = {u: i for i, u in enumerate(path, start=1)}
    js = sorted(upos[w] for w in g.adj[tip])
    j1 = js[0]
    z = path[j1 - 1]
    base = Path(cyc + path[1:])
    if pair is None:
        pair = aligned_pair(g, base, z, check_input=False)
    p1, p2 = pair.p1.vertices, pair.p2.vertices

    on_cycle = set(cyc)
    on_path = set(path)
    ys = set(path[j1 - 1:])
    a1, a2 = _last_in(p1, on_cycle), _last_in(p2, on_cycle)
    b1, b2 = _first_in(p1, ys), _first_in(p2, ys)
    info = dict(iteration=iteration, cycle_len_before=c, path_len=ell + 1,
                tip_degree=len(js), z=z, a1=a1, a2=a2, b1=b1, b2=b2, p1=p1, p2=p2)

    def fail(msg):
        info.setdefault("case_taken", CASE2)
        info.setdefault("cycle_len_after", c)
        return ProofViolation(msg, [ImprovementTrace(**info)] + list(pair.trace))

    if b1 != z:
        raise fail(f"b1={b1} differs from z={z} although p1 is aligned")

    if a1 == a2:
        info["case_taken"] = CASE2_DEGENERATE
        if a1 != cyc[0]:
            raise fail(f"a1 == a2 == {a1} but not v1={cyc[0]}")
        for ph in (p1, p2):
            if cyc[-1] in ph:
                continue
            ui = _first_in(ph[1:], on_path)
            i = upos[ui]
            if i < 2:
                continue
            inner = ph[1:ph.index(ui)]
            out = Cycle(cyc + path[1:i] + inner[::-1])
            break
        else:
            raise fail("degenerate case without a usable path")
    else:
        info["case_taken"] = CASE2
        pa1, pa2 = cyc.index(a1), cyc.index(a2)
        forward = tuple(cyc[(pa2 + t) % c] for t in range((pa1 - pa2) % c + 1))
        backward = tuple(cyc[(pa1 + t) % c] for t in range((pa2 - pa1) % c + 1))[::-1]
        arc = max(forward, backward, key=lambda s: (len(s), [-v for v in s]))
        if len(arc) < 1 + math.ceil(c / 2):
            raise fail(f"arc of {len(arc)} vertices shorter than 1+ceil(c/2)")
        j = upos[b2]
        if j <= j1:
            raise fail(f"b2=u_{j} not beyond u_{j1}")
        jp = max(x for x in js if x < j)
        seg1 = p1[p1.index(a1):p1.index(b1) + 1]
        seg2 = p2[p2.index(a2):p2.index(b2) + 1]
        walk = (
            list(arc)
            + list(seg1[1:])
            + list(path[j1:jp])
            + [tip]
            + list(path[j - 1:ell][::-1])
            + list(seg2[::-1][1:-1])
        )
        info.update(j=j, j_prime=jp, arc=arc)
        out = Cycle(walk)

    info["cycle_len_after"] = len(out)
    if not verify_cycle(g, out) or len(out) <= c:
        raise fail(f"closed walk {out.vertices} is not a longer cycle: {verify_cycle(g, out).reason}")
    return out, ImprovementTrace(**info)


def improve_case2(g: Graph, lol: Lollipop) -> Cycle:
    """Longer cycle when every tip neighbour lies on the path.

    Requires ``l >= 1`` and ``|C| < min(n, 2*delta)``.
    """
    _require_tip_maximal(g, lol)
    c, n, delta = len(lol.cycle), g.n, g.min_degree()
    if lol.ell < 1:
        raise ContractError("path has no edge")
    if c >= min(n, 2 * delta):
        raise ContractError(f"cycle length {c} already meets min(n, 2*delta) = {min(n, 2 * delta)}")
    on_path = set(lol.path.vertices)
    if any(w not in on_path for w in g.adj[lol.tip]):
        raise ContractError("tip has a neighbour off the path")
    return _case2(g, lol)[0]


def _require_tip_maximal(g, lol):
    v = verify_lollipop(g, lol)
    if not v:
        raise ContractError(f"invalid lollipop: {v.reason}")
    if lol.cycle.vertices[-1] != lol.path.origin:
        raise ContractError("cycle must be labelled so that its last vertex is u1")
    used = set(lol.cycle.vertices) | set(lol.path.vertices)
    if any(w not in used for w in g.adj[lol.tip]):
        raise ContractError("tip is not maximal")


# ---------------------------------------------------------------------------
# Driver


def long_cycle(g: Graph, stop_at_bound: bool = True) -> CycleCertificate:
    """Cycle of length at least ``min(n, 2*delta)`` with its improvement trace.

    With ``stop_at_bound=False`` Case 1 improvements continue past the bound
    until the tip's cycle neighbours are exhausted; Case 2 is never entered
    once the bound holds since it needs ``|C| < min(n, 2*delta)``.
    """
    require_two_connected(g)
    n, delta = g.n, g.min_degree()
    bound = min(n, 2 * delta)
    trace = []
    lol = _hang(g, _dfs_cycle(g))
    iteration = 0
    while True:
        c = len(lol.cycle)
        lol = grow_path(g, lol)
        trace.append(ImprovementTrace(iteration, GROW, c, c, path_len=len(lol.path)))
        if c >= bound and stop_at_bound or c == n:
            break
        if lol.ell < 1:
            raise ProofViolation(f"cannot grow a path off a cycle of length {c} < n", trace)
        tip = lol.tip
        on_cycle = set(lol.cycle.vertices[:-1])
        if any(w in on_cycle for w in g.adj[tip]):
            res = _case1(g, lol)
            if res is None:
                # every cycle neighbour sits in v_{l+1}..v_{c-l-1}, no two adjacent
                trace.append(ImprovementTrace(iteration, CASE1_NONE, c, c,
                                              path_len=len(lol.path), tip_degree=g.degree(tip)))
                cap = math.ceil((c - 1) / 2)
                if cap < g.degree(tip) or cap < delta:
                    raise ProofViolation(
                        f"Case 1 failed with ceil((c-1)/2)={cap} below tip degree {g.degree(tip)}"
                        f" or delta={delta}", trace)
                if c < bound:
                    raise ProofViolation(f"Case 1 failed below the bound (c={c})", trace)
                break
            new, case = res
            step = ImprovementTrace(iteration, case, c, len(new), path_len=len(lol.path))
        else:
            if c >= bound:
                break
            try:
                new, step = _case2(g, lol, iteration)
            except ProofViolation as exc:
                raise ProofViolation(str(exc), trace + exc.trace) from None
        if not verify_cycle(g, new) or len(new) <= c:
            raise ProofViolation(f"{step.case_taken} produced an invalid or shorter cycle", trace + [step])
        trace.append(step)
        iteration += 1
        if iteration > n:
            raise ProofViolation("more than n improvements", trace)
        lol = _hang(g, new)

    cert = CycleCertificate(lol.cycle, n, delta, bound, tuple(trace))
    if len(cert.cycle) < bound or not verify_cycle(g, cert.cycle):
        raise ProofViolation("final cycle misses the bound", trace)
    return cert


def verify_certificate(g: Graph, cert: dict) -> Verdict:
    """Re-check a certificate dictionary against ``g`` from scratch."""
    try:
        cycle = [int(v) for v in cert["cycle"]]
        n, delta, bound = int(cert["n"]), int(cert["delta"]), int(cert["bound"])
    except (KeyError, TypeError, ValueError) as exc:
        return Verdict(False, f"malformed certificate: {exc!r}")
    if n != g.n:
        return Verdict(False, f"n={n} but graph has {g.n} vertices")
    if delta != g.min_degree():
        return Verdict(False, f"delta={delta} but graph has minimum degree {g.min_degree()}")
    if bound != min(g.n, 2 * g.min_degree()):
        return Verdict(False, "bound is not min(n, 2*delta)")
    v = verify_cycle(g, cycle)
    if not v:
        return v
    if len(cycle) < bound:
        return Verdict(False, f"cycle length {len(cycle)} below bound {bound}")
    return Verdict(True, "ok")
