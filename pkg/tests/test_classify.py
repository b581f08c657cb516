import pytest
from hypothesis import given, strategies as st

from nsdweights.cactus import build_from_recipe, parse_certificate, certificate_matches, random_recipe
from nsdweights.classify import classify, local_search, transfer
from nsdweights.generators import complete_bipartite, cycle, hexagon_pair, path, random_bridgeless_bipartite, random_tree, theta
from nsdweights.graph import MultiGraph
from nsdweights.oracle import oracle_exists_proper
from nsdweights.weighting import WeightPair, Weighting, conflicts

from strategies import small_copies_graphs


def test_c6():
    v = classify(cycle(6))
    assert v.has_property is False and v.method == "recognizer"
    assert certificate_matches(parse_certificate(v.certificate), cycle(6))


def test_p5():
    v = classify(path(5))
    assert v.has_property and v.method == "tree-dp" and conflicts(v.witness).proper


def test_hexagon_pair():
    assert classify(hexagon_pair()).has_property is False
    v = classify(hexagon_pair(), (1, 2))
    assert v.has_property and conflicts(v.witness).proper


def test_trees_under_other_pairs():
    v = classify(path(6), (1, 2))
    assert v.has_property is (oracle_exists_proper(path(6), (1, 2)) is not None)


def test_unknown_beyond_budget():
    # bridged, not a tree, both sides odd and too large for the oracle
    g = hexagon_pair().disjoint_union(cycle(6))
    g = g.with_edges([(5, 14)])
    v = classify(g, budget=10)
    assert v.has_property in (None, True)
    if v.has_property:
        assert conflicts(v.witness).proper


def test_disconnected_graph():
    g = path(5).disjoint_union(cycle(8))
    v = classify(g)
    assert v.has_property and conflicts(v.witness).proper
    assert classify(path(5).disjoint_union(cycle(6))).has_property is False
    assert classify(MultiGraph(3)).has_property


def test_transfer():
    w = Weighting(path(3), (1, 0))
    assert transfer(w, (0, 5)).choice == (1, 0)
    t = transfer(w, (5, 0))
    assert [t.pair.value(c) for c in t.choice] == [5, 0]


def test_local_search_non_bipartite():
    k4 = MultiGraph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    w = local_search(k4, WeightPair(1, 2))
    assert w is None or conflicts(w).proper


@given(small_copies_graphs(max_copies=12), st.sampled_from([(0, 1), (1, 2), (0, 3), (1, 3), (2, 5)]))
def test_agrees_with_oracle(g, pair):
    v = classify(g, pair)
    truth = oracle_exists_proper(g, pair) is not None
    assert v.has_property == truth
    if truth:
        assert conflicts(v.witness).proper


@given(st.integers(4, 16), st.integers(0, 12), st.integers(0, 10**6), st.sampled_from([(0, 1), (1, 2)]))
def test_bridgeless_beyond_budget_is_decided(n, extra, seed, pair):
    m = n + extra
    if m > (n // 2) * (n - n // 2) or (extra == 0 and n % 2):
        return
    g = random_bridgeless_bipartite(n, m, seed)
    v = classify(g, pair, budget=0)
    assert v.has_property is not None
    if v.has_property and v.witness is not None:
        assert conflicts(v.witness).proper


@given(st.integers(0, 2**32))
def test_large_cacti_lack_property(seed):
    g = build_from_recipe(random_recipe(seed, max_cycles=12))
    v = classify(g, budget=0)
    assert v.has_property is False and v.method == "recognizer"


@given(st.integers(2, 60), st.integers(0, 2**32))
def test_large_trees(n, seed):
    v = classify(random_tree(n, seed))
    assert v.has_property is not None
    if v.has_property:
        assert conflicts(v.witness).proper


def test_deterministic():
    g = complete_bipartite(3, 4)
    assert classify(g, seed=3).record() == classify(g, seed=3).record()
    assert classify(theta(5, 5, 5)).has_property
