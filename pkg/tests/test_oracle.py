"""The oracle against plain enumeration with itertools.product."""

from itertools import product

import pytest
from hypothesis import given, strategies as st

from nsdweights.errors import BudgetExceeded
from nsdweights.generators import cycle, path, star
from nsdweights.graph import MultiGraph
from nsdweights.oracle import achievable_degree_set, count_proper, oracle_exists_proper
from nsdweights.weighting import Weighting, as_increments, conflicts, weighted_degrees

from strategies import small_copies_graphs


def brute(g, pair=(0, 1), inc=None):
    """All proper weightings in lexicographic order of their choice vectors."""
    out = []
    inc = as_increments(g, inc)
    for choice in product((0, 1), repeat=g.num_copies()):
        w = Weighting(g, choice, pair, inc)
        if conflicts(w).proper:
            out.append(w)
    return out


def test_k2_and_p6_bad():
    assert oracle_exists_proper(path(2)) is None
    assert oracle_exists_proper(path(6)) is None
    assert not brute(path(6))


def test_c4_good():
    w = oracle_exists_proper(cycle(4))
    assert w is not None and conflicts(w).proper
    assert sorted(weighted_degrees(w)) == [0, 1, 1, 2]


def test_budget():
    with pytest.raises(BudgetExceeded):
        oracle_exists_proper(cycle(30))
    assert oracle_exists_proper(cycle(26), edge_budget=26) is None


def test_small_named_results():
    # frozen from plain enumeration of all assignments
    assert count_proper(cycle(4)) == 4
    assert count_proper(path(3)) == 1
    assert count_proper(path(4)) == 2
    assert count_proper(path(5)) == 1
    assert count_proper(cycle(8)) == 4
    assert oracle_exists_proper(cycle(6)) is None
    assert oracle_exists_proper(cycle(8)) is not None


def test_p3_degree_sets():
    assert achievable_degree_set(path(3), 0) == {1}
    assert achievable_degree_set(path(3), 0, increments={0: 1}) == {2}


def test_k1_degree_sets():
    k1 = MultiGraph(1)
    assert achievable_degree_set(k1, 0) == {0}
    assert achievable_degree_set(k1, 0, increments={0: 1}) == {1}


def test_star_degree_set():
    assert achievable_degree_set(star(4), 0) == {2, 3}


def test_stats_nodes():
    stats = {}
    oracle_exists_proper(cycle(22), stats=stats)
    assert 0 < stats["nodes"] < 1000


@given(small_copies_graphs(max_copies=10), st.sampled_from([(0, 1), (1, 2), (1, 3), (-1, 2)]))
def test_lex_first_matches_brute_force(g, pair):
    want = brute(g, pair)
    got = oracle_exists_proper(g, pair)
    if not want:
        assert got is None
    else:
        assert got == want[0]
    assert count_proper(g, pair) == len(want)


@given(small_copies_graphs(max_copies=9), st.data())
def test_degree_set_matches_brute_force(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    inc = {v: data.draw(st.integers(0, 2))}
    want = {weighted_degrees(w)[v] for w in brute(g, (0, 1), inc)}
    assert achievable_degree_set(g, v, increments=inc) == want


@given(small_copies_graphs(max_copies=10), st.sampled_from([2, 3, 5, -1]))
def test_scaling_preserves_existence(g, a):
    assert (oracle_exists_proper(g) is None) == (oracle_exists_proper(g, (0, a)) is None)


def test_pendant_vertex_sanity():
    # adding a pendant vertex should not blow up the search
    g = cycle(10)
    s1, s2 = {}, {}
    oracle_exists_proper(g, stats=s1)
    h = g.with_vertices(1).with_edges([(0, 10)])
    oracle_exists_proper(h, stats=s2)
    assert s2["nodes"] <= 2 * s1["nodes"] + 4
