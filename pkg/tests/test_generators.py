import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aligned_cycles.connectivity import analyze
from aligned_cycles.generators import (
    CATALOG,
    GenSpec,
    generate,
    random_corpus,
    random_two_connected,
    theta_graph,
    wheel_graph,
)
from aligned_cycles.graph import format_graph
from aligned_cycles.oracles import brute_two_connected


def test_cycle_family():
    g = generate(GenSpec("cycle", {"n": 5}))
    assert g.edges == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}


def test_complete_bipartite_family():
    g = generate(GenSpec("complete_bipartite", {"a": 2, "b": 3}))
    assert (g.n, g.m, g.min_degree()) == (5, 6, 2)


def test_random_family_is_two_connected():
    g = generate(GenSpec("random_2conn", {"n": 20, "m": 30}, seed=7))
    assert (g.n, g.m) == (20, 30)
    assert analyze(g).two_connected


def test_theta_and_wheel_shapes():
    t = theta_graph(1, 3, 4)
    assert (t.n, t.m) == (10, 11)
    assert t.degree(0) == t.degree(1) == 3
    w = wheel_graph(6)
    assert (w.n, w.m, w.degree(0)) == (6, 10, 5)


@pytest.mark.parametrize("spec", [
    ("cycle", {"n": 2}),
    ("complete_bipartite", {"a": 0, "b": 3}),
    ("theta", {"a": 0, "b": 0, "c": 3}),
    ("random_2conn", {"n": 5, "m": 4}),
    ("random_2conn", {"n": 5, "m": 11}),
])
def test_out_of_range(spec):
    with pytest.raises(ValueError):
        generate(GenSpec(*spec))


def test_spec_validation():
    with pytest.raises(ValueError):
        GenSpec("star", {"n": 4})
    with pytest.raises(ValueError):
        GenSpec("cycle", {"k": 4})
    with pytest.raises(ValueError):
        GenSpec("cycle", {"n": 4}, seed=-1)


@settings(max_examples=300, deadline=None)
@given(st.integers(3, 30), st.data(), st.integers(0, 2**64 - 1))
def test_random_2conn_properties(n, data, seed):
    m = data.draw(st.integers(n, n * (n - 1) // 2))
    g = random_two_connected(n, m, seed)
    assert (g.n, g.m) == (n, m)
    assert brute_two_connected(g)
    assert format_graph(random_two_connected(n, m, seed)) == format_graph(g)


def test_corpus_is_reproducible():
    a = [format_graph(g) for g in random_corpus(50, 99)]
    b = [format_graph(g) for g in random_corpus(50, 99)]
    assert a == b
    assert a != [format_graph(g) for g in random_corpus(50, 100)]


def test_catalog_builds():
    for name, (build, delta, longest) in CATALOG.items():
        g = build()
        assert analyze(g).two_connected, name
        assert g.min_degree() == delta
        assert 3 <= longest <= g.n
