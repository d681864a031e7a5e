import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import aligned_cycles.aligned as aligned_mod
from aligned_cycles.aligned import (
    BASE,
    DEGENERATE,
    aligned_pair,
    check_aligned_pair,
    escape_path,
)
from aligned_cycles.connectivity import analyze
from aligned_cycles.errors import ContractError, NoPathError, ProofViolation
from aligned_cycles.generators import complete_graph, cycle_graph, path_graph, random_two_connected
from aligned_cycles.graph import Path
from aligned_cycles.oracles import aligned_by_definition, aligned_tuple_exists, brute_aligned_pair_ok

from helpers import all_graphs, simple_paths_from, two_connected_graphs


def _aligned_paths(g, x, t, base):
    stack = [(x,)]
    while stack:
        p = stack.pop()
        if p[-1] == t:
            yield p
            continue
        for w in g.adj[p[-1]]:
            if w not in p and aligned_by_definition(base, p + (w,)):
                stack.append(p + (w,))


def test_c5_example_is_the_unique_valid_pair():
    g = cycle_graph(5)
    base = (0, 1, 2, 3, 4)
    pair = aligned_pair(g, Path(base), 2)
    assert (pair.p1.vertices, pair.p2.vertices) == ((0, 1, 2), (0, 4))
    valid = [(p1, p2)
             for p1 in _aligned_paths(g, 0, 2, base)
             for p2 in _aligned_paths(g, 0, 4, base)
             if brute_aligned_pair_ok(g, base, 2, p1, p2)]
    assert valid == [((0, 1, 2), (0, 4))]


def test_triangle_base_case():
    pair = aligned_pair(cycle_graph(3), Path((0, 1)), 1)
    assert pair.p1.vertices == (0, 2, 1)
    assert pair.p2.vertices == (0, 1)
    assert [s.case for s in pair.trace] == [BASE]


def test_z_equal_x_is_degenerate():
    pair = aligned_pair(complete_graph(4), Path((0, 1, 2, 3)), 0)
    assert pair.p1.vertices == (0,)
    assert pair.p2.vertices == (0, 1, 2, 3)
    assert pair.trace[0].case == DEGENERATE


def test_base_case_with_z_off_the_path():
    g = complete_graph(4)
    pair = aligned_pair(g, Path((0, 1)), 3)
    assert pair.p2.vertices == (0, 1)
    assert pair.p1.end == 3 and 1 not in pair.p1
    assert check_aligned_pair(g, pair.base, 3, pair.p1, pair.p2) is None


def test_preconditions():
    with pytest.raises(ContractError):
        aligned_pair(path_graph(4), Path((0, 1, 2)), 3)
    with pytest.raises(ContractError):
        aligned_pair(cycle_graph(5), Path((0,)), 3)
    with pytest.raises(ContractError):
        aligned_pair(cycle_graph(5), Path((0, 2)), 3)
    with pytest.raises(ContractError):
        aligned_pair(cycle_graph(5), Path((0, 1)), 9)


# ---------------------------------------------------------------------------
# escape paths


def test_escape_path_c5():
    assert escape_path(cycle_graph(5), 1, 0, {2, 3}).vertices == (0, 4, 3)


def test_escape_path_adjacent_target():
    assert escape_path(complete_graph(5), 1, 0, {3, 4}).vertices == (0, 3)


def test_escape_path_unreachable():
    with pytest.raises(NoPathError):
        escape_path(path_graph(4), 1, 0, {3})


def test_escape_path_contract():
    g = cycle_graph(5)
    with pytest.raises(ContractError):
        escape_path(g, 0, 0, {2})
    with pytest.raises(ContractError):
        escape_path(g, 1, 0, set())
    with pytest.raises(ContractError):
        escape_path(g, 1, 0, {0, 2})


def test_escape_path_interior_avoids_targets():
    g = random_two_connected(30, 50, 3)
    rng = random.Random(1)
    for _ in range(50):
        forbidden, source = rng.sample(range(30), 2)
        targets = set(rng.sample([v for v in range(30) if v not in (forbidden, source)], 4))
        q = escape_path(g, forbidden, source, targets)
        assert q.end in targets
        assert not set(q.vertices[:-1]) & targets
        assert forbidden not in q


# ---------------------------------------------------------------------------
# soundness


@pytest.mark.parametrize("n", [3, 4, 5])
def test_exhaustive_small_graphs(n):
    """Every 2-connected labelled graph, every path, every z."""
    for g in all_graphs(n):
        if not analyze(g).two_connected:
            continue
        for x in range(n):
            for p in simple_paths_from(g, x):
                for z in range(n):
                    pair = aligned_pair(g, Path(p), z, check_input=False)
                    assert brute_aligned_pair_ok(g, p, z, pair.p1, pair.p2), (g.edges, p, z)


@settings(max_examples=150, deadline=None)
@given(two_connected_graphs(max_n=9), st.data())
def test_random_instances_pass_both_checkers(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    paths = list(itertools.islice(simple_paths_from(g, x), 400))
    p = data.draw(st.sampled_from(paths))
    z = data.draw(st.integers(0, g.n - 1))
    pair = aligned_pair(g, Path(p), z)
    assert check_aligned_pair(g, pair.base, z, pair.p1, pair.p2) is None
    assert brute_aligned_pair_ok(g, p, z, pair.p1, pair.p2)


@settings(max_examples=60, deadline=None)
@given(two_connected_graphs(max_n=8), st.data())
def test_existence_oracle_agrees(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    p = data.draw(st.sampled_from(list(itertools.islice(simple_paths_from(g, x, max_len=6), 200))))
    z = data.draw(st.integers(0, g.n - 1))
    aligned_pair(g, Path(p), z)
    assert aligned_tuple_exists(g, p, x, [z, p[-1]])


def test_remark3_shape_on_cycles():
    for n in range(5, 10):
        g = cycle_graph(n)
        base = Path(range(n))
        pair = aligned_pair(g, base, 2)
        assert pair.p2.end == n - 1
        assert pair.p1.vertices == (0, 1, 2)
        assert pair.p2.vertices == (0, n - 1)


# ---------------------------------------------------------------------------
# depth and work


def test_depth_is_path_length_minus_one():
    g = random_two_connected(25, 45, 8)
    rng = random.Random(4)
    for _ in range(30):
        x = rng.randrange(25)
        p = max(itertools.islice(simple_paths_from(g, x, max_len=12), 300), key=len)
        z = rng.choice([v for v in range(25) if v not in p[:-1]])
        pair = aligned_pair(g, Path(p), z)
        assert len(pair.trace) == len(p) - 1
        assert [s.level for s in pair.trace] == list(range(len(p) - 2, -1, -1))


def test_work_is_linear_per_level():
    for seed, (n, m) in enumerate([(60, 90), (200, 300), (600, 1000)]):
        g = random_two_connected(n, m, seed)
        rng = random.Random(seed)
        x = rng.randrange(n)
        p = [x]
        while True:
            nxt = [w for w in g.adj[p[-1]] if w not in p]
            if not nxt:
                break
            p.append(rng.choice(nxt))
        for z in rng.sample(range(n), 5):
            pair = aligned_pair(g, Path(p), z, check_input=False)
            assert pair.work <= 4 * len(p) * (n + 2 * m), (n, len(p), pair.work)


def test_long_base_path_needs_no_recursion():
    g = cycle_graph(2000)
    pair = aligned_pair(g, Path(range(2000)), 1000)
    assert pair.p1.vertices == tuple(range(1001))
    assert pair.p2.vertices == (0, 1999)


# ---------------------------------------------------------------------------
# diagnostics


def test_broken_escape_path_raises_with_trace(monkeypatch):
    def wrong(g, forbidden, source, targets, counter=None):
        return Path((source, forbidden))

    monkeypatch.setattr(aligned_mod, "escape_path", wrong)
    with pytest.raises(ProofViolation) as exc:
        aligned_pair(cycle_graph(5), Path((0, 1, 2, 3, 4)), 2)
    assert exc.value.trace
    assert exc.value.trace[0].case == DEGENERATE
