import itertools

import pytest

from aligned_cycles.generators import (
    CATALOG,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
)
from aligned_cycles.graph import verify_cycle
from aligned_cycles.oracles import (
    BudgetExceeded,
    OracleBudget,
    aligned_by_definition,
    aligned_tuple_exists,
    brute_longest_cycle,
    find_aligned_tuple,
    internally_disjoint,
    max_aligned_disjoint_paths,
)

from helpers import CATALOG_SMALL, graph


def _longest_by_permutation(g):
    """Slow second opinion: try every vertex sequence as a cycle."""
    best = 0
    for k in range(g.n, 2, -1):
        for combo in itertools.combinations(range(g.n), k):
            first, rest = combo[0], combo[1:]
            for perm in itertools.permutations(rest):
                seq = (first,) + perm
                if all(g.has_edge(a, b) for a, b in zip(seq, seq[1:] + seq[:1])):
                    return k
    return best


@pytest.mark.parametrize("g, expected", [
    (complete_graph(4), 4),
    (complete_bipartite(2, 3), 4),
    (cycle_graph(6), 6),
    (path_graph(5), 0),
])
def test_longest_cycle_small(g, expected):
    length, witness = brute_longest_cycle(g)
    assert length == expected == _longest_by_permutation(g)
    if length:
        assert verify_cycle(g, witness) and len(witness) == length
    else:
        assert witness is None


def test_petersen_longest_is_nine():
    length, witness = brute_longest_cycle(petersen_graph())
    assert length == 9
    assert verify_cycle(petersen_graph(), witness)


def test_catalog_goldens(catalog_entry):
    name, g, delta, longest = catalog_entry
    assert g.min_degree() == delta
    assert brute_longest_cycle(g)[0] == longest


def test_budget_errors():
    with pytest.raises(BudgetExceeded):
        brute_longest_cycle(petersen_graph(), OracleBudget(max_n=9))
    with pytest.raises(BudgetExceeded):
        brute_longest_cycle(complete_bipartite(5, 7), OracleBudget(max_n=12, max_millis=1))
    with pytest.raises(ValueError):
        OracleBudget(max_n=0)


def test_definitions():
    assert aligned_by_definition((0, 1, 2, 3), (0, 3))
    assert not aligned_by_definition((0, 1, 2, 3), (0, 3, 2))
    assert internally_disjoint((0, 1, 2), (0, 3, 2))
    assert not internally_disjoint((0, 1), (0, 1))
    assert not internally_disjoint((0, 1, 2), (0, 2, 4))


def test_remark3_c5():
    g = cycle_graph(5)
    base = (0, 1, 2, 3, 4)
    assert not aligned_tuple_exists(g, base, 0, [2, 2])
    witness = find_aligned_tuple(g, base, 0, [2, 4])
    assert witness == [(0, 1, 2), (0, 4)]


def test_single_terminal_is_base_path():
    for name in CATALOG_SMALL:
        g = CATALOG[name][0]()
        base = (0,) + (g.adj[0][0],)
        assert aligned_tuple_exists(g, base, 0, [base[-1]])


def test_max_aligned_c5_and_k4():
    assert max_aligned_disjoint_paths(cycle_graph(5), (0, 1, 2, 3, 4)) == 2
    assert max_aligned_disjoint_paths(complete_graph(4), (0, 1)) == 3


def test_max_aligned_counts_are_realised():
    g = complete_graph(5)
    base = (0, 1, 2, 3, 4)
    t = max_aligned_disjoint_paths(g, base)
    witness = find_aligned_tuple(g, base, 0, [4] * t)
    assert len(witness) == t
    for p, q in itertools.combinations(witness, 2):
        assert internally_disjoint(p, q)
    assert not aligned_tuple_exists(g, base, 0, [4] * (t + 1))


def _three_connected(g):
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


def test_three_connected_graph_with_only_two_aligned_paths():
    # found by random search; Menger gives 3 disjoint 0,1-paths but only 2 can be aligned
    g = graph(6, [(0, 2), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (2, 3), (2, 5),
                  (3, 4), (3, 5), (4, 5)])
    base = (0, 4, 3, 5, 2, 1)
    assert _three_connected(g)
    assert max_aligned_disjoint_paths(g, base) == 2
    assert aligned_tuple_exists(g, (0, 2, 1), 0, [1, 1, 1])


def test_tuple_contract():
    g = cycle_graph(5)
    with pytest.raises(ValueError):
        aligned_tuple_exists(g, (0, 1), 0, [])
    with pytest.raises(ValueError):
        aligned_tuple_exists(g, (1, 0), 0, [2])
    with pytest.raises(BudgetExceeded):
        aligned_tuple_exists(petersen_graph(), (0, 1), 0, [1])


def test_pendant_graph_has_no_cycle():
    g = graph(4, [(0, 1), (1, 2), (1, 3)])
    assert brute_longest_cycle(g) == (0, None)
