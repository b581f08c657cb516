import pytest
from hypothesis import given, strategies as st

from nsdweights.errors import Disconnected, NonBipartite, ParseError
from nsdweights.generators import complete_bipartite, cycle, generate_family, hexagon_pair, path, random_bridgeless_bipartite, random_tree, star, theta
from nsdweights.graph import (
    MultiGraph,
    bipartition,
    bridges,
    bridges_naive,
    parse_edge_list,
    serialize_edge_list,
    suspended_paths,
    to_dot,
    two_colouring,
)

from strategies import multigraphs


def test_parse_k2():
    g = parse_edge_list("p 2 1\n0 1")
    assert g.n == 2 and g.pairs() == [(0, 1)] and g.num_copies() == 1


def test_parse_multiplicity():
    g = parse_edge_list(b"p 2 1\n0 1 3\n")
    assert g.multiplicity(0, 1) == 3 and g.num_copies() == 3 and not g.is_simple()


def test_parse_merges_repeated_pairs():
    g = parse_edge_list("p 3 3\n0 1\n1 0 2\n1 2\n")
    assert g.multiplicity(0, 1) == 3
    assert serialize_edge_list(g) == "p 3 2\n0 1 3\n1 2\n"


def test_triangle_not_bipartite():
    g = parse_edge_list("p 3 3\n0 1\n1 2\n0 2")
    with pytest.raises(NonBipartite) as info:
        bipartition(g)
    assert sorted(info.value.cycle) == [0, 1, 2]


@pytest.mark.parametrize(
    "text,line",
    [
        ("p 2 1\n0 1 x\n", 2),
        ("p 2 1\n0 0\n", 2),
        ("p 2 1\n0 2\n", 2),
        ("p 2 1\n0 1 0\n", 2),
        ("q 2 1\n0 1\n", 1),
        ("p 3 2\n# comment\n0 1\n1 2 3 4\n", 4),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_parse_edge_count_mismatch():
    with pytest.raises(ParseError):
        parse_edge_list("p 3 3\n0 1\n1 2\n")


def test_bipartition_examples():
    bp = bipartition(cycle(6))
    assert bp.X == [0, 2, 4] and bp.Y == [1, 3, 5]
    bp = bipartition(path(6))
    assert len(bp.X) == len(bp.Y) == 3
    assert bp.side[0] == 0


def test_c5_witness_is_odd_cycle():
    with pytest.raises(NonBipartite) as info:
        bipartition(cycle(5))
    c = info.value.cycle
    assert len(c) == 5
    g = cycle(5)
    assert all(g.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))


def test_bipartition_disconnected():
    with pytest.raises(Disconnected):
        bipartition(MultiGraph(4, [(0, 1), (2, 3)]))


def test_bridges_examples():
    assert bridges(path(6)) == {(i, i + 1) for i in range(5)}
    assert bridges(cycle(6)) == set()
    assert bridges(hexagon_pair()) == {(0, 12), (12, 13), (6, 13)}


def test_parallel_pair_is_no_bridge():
    g = MultiGraph(3, [(0, 1, 2), (1, 2)])
    assert bridges(g) == {(1, 2)}


def test_hexagon_pair_counts():
    g = hexagon_pair()
    assert (g.n, g.num_pairs(), g.num_copies()) == (14, 15, 15)
    assert g.is_bipartite() and g.is_connected()


def test_suspended_paths_doubled_edge_on_c6():
    g = cycle(6).with_multiplicity(0, 1, 2)
    paths = suspended_paths(g)
    assert len(paths) == 1
    p = paths[0]
    assert p.length == 5 and {p.vertices[0], p.vertices[-1]} == {0, 1}
    assert not p.closed and not p.degenerate


def test_suspended_paths_k4_and_p6():
    k4 = MultiGraph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert suspended_paths(k4) == []
    (p,) = suspended_paths(path(6))
    assert p.degenerate and p.length == 5


def test_suspended_cycle_on_bare_cycle():
    (p,) = suspended_paths(cycle(6))
    assert p.closed and p.length == 6


def test_theta_suspended_paths():
    paths = suspended_paths(theta(1, 5, 5))
    assert sorted(p.length for p in paths) == [5, 5]


@given(multigraphs())
def test_every_degree_two_vertex_in_one_path(g):
    for comp in g.components():
        sub, _ = g.induced(comp)
        seen = []
        for p in suspended_paths(sub):
            seen += list(p.internal)
            if p.closed:
                seen.append(p.vertices[0])
        deg2 = [v for v in range(sub.n) if sub.degree(v) == 2 and len(sub.neighbours(v)) == 2]
        assert sorted(set(seen)) == sorted(seen)
        assert set(deg2) <= set(seen)


@given(multigraphs())
def test_roundtrip(g):
    assert parse_edge_list(serialize_edge_list(g)) == g


@given(multigraphs())
def test_handshake(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.num_copies()


@given(multigraphs(max_n=9, max_pairs=12))
def test_bridges_match_naive(g):
    assert bridges(g) == bridges_naive(g)


@given(st.integers(4, 14), st.integers(0, 6), st.integers(0, 10**6))
def test_ear_graphs_are_bridgeless_bipartite(n, extra, seed):
    m = n + extra
    if m > (n // 2) * (n - n // 2) or (extra == 0 and n % 2):
        return
    g = random_bridgeless_bipartite(n, m, seed)
    assert g.is_simple() and g.is_connected() and g.num_pairs() == m
    assert bridges(g) == set()
    bipartition(g)


def test_random_bridgeless_example():
    g = generate_family("random_bridgeless_bipartite", 10, 14, 1)
    assert bridges(g) == set() and bipartition(g).side[0] == 0
    assert g == generate_family("random_bridgeless_bipartite", 10, 14, 1)


def test_generator_errors():
    with pytest.raises(ValueError):
        random_bridgeless_bipartite(5, 5, 0)
    with pytest.raises(ValueError):
        random_bridgeless_bipartite(4, 5, 0)
    with pytest.raises(ValueError):
        generate_family("petersen", 10)


def test_families():
    assert generate_family("cycle", 6) == cycle(6)
    assert star(4).degree(0) == 3
    assert complete_bipartite(2, 3).num_pairs() == 6
    t = random_tree(12, 7)
    assert t.is_tree() and t == random_tree(12, 7)


def test_graph_operations():
    g = cycle(4)
    assert g.without_edge(0, 1).num_pairs() == 3
    h, old = g.induced([1, 2, 3])
    assert h.num_pairs() == 2 and old == [1, 2, 3]
    u = g.disjoint_union(path(2))
    assert u.n == 6 and len(u.components()) == 2
    assert two_colouring(u)[4] != two_colouring(u)[5]
    assert "0 -- 1" in to_dot(g)
    assert hash(g) == hash(cycle(4))
