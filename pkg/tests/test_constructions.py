import pytest
from hypothesis import given, strategies as st

from nsdweights.constructions import (
    K2,
    BadFromGvS1,
    BadGlue,
    Cycle,
    BadPath,
    GvMinusFromBad,
    GvS1a,
    GvS1b,
    GvS3,
    SpecSampler,
    actual_claim,
    construct,
    format_spec,
    bad_tree_decompositions,
    parse_spec,
    spec_size,
)
from nsdweights.errors import InvalidSpec
from nsdweights.generators import hexagon_pair, path
from nsdweights.oracle import achievable_degree_set, oracle_exists_proper
from nsdweights.trees import canonical_tree_form, enumerate_trees, is_bad_tree, vertex_status

P3_SPEC = GvS1b(1, (), (K2(),))
P6_SPEC = BadFromGvS1(1, P3_SPEC)


def test_p3_spec():
    b = construct(P3_SPEC)
    assert b.graph == path(3) or canonical_tree_form(b.graph) == canonical_tree_form(path(3))
    assert b.graph.degree(b.vertex) == 1
    assert vertex_status(b.graph, b.vertex).pair == (1, 2)


def test_k1_spec():
    b = construct(GvS1b(0))
    assert b.graph.n == 1 and vertex_status(b.graph, 0).pair == (0, 1)


def test_p6_and_minus():
    b = construct(P6_SPEC)
    assert canonical_tree_form(b.graph) == canonical_tree_form(path(6))
    m = construct(GvMinusFromBad(P6_SPEC))
    assert canonical_tree_form(m.graph) == canonical_tree_form(path(4))
    assert m.graph.degree(m.vertex) == 1
    assert vertex_status(m.graph, m.vertex).label == "gv_minus"


def test_bad_from_gvs1_needs_positive_s():
    with pytest.raises(InvalidSpec):
        construct(BadFromGvS1(0, GvS1b(0)))


def test_claim_mismatch():
    with pytest.raises(InvalidSpec):
        construct(BadFromGvS1(2, P3_SPEC))
    with pytest.raises(InvalidSpec):
        GvS1b(2, (), (K2(),)).claim()
    with pytest.raises(InvalidSpec):
        Cycle(8).claim()


def test_bad_path_minimal_is_p6():
    b = construct(BadPath(1, 0, (K2(), K2())))
    assert canonical_tree_form(b.graph) == canonical_tree_form(path(6))
    assert is_bad_tree(b.graph)


def test_bad_path_with_cycles_is_hexagon_pair():
    b = construct(BadPath(1, 0, (Cycle(6), Cycle(6))))
    assert (b.graph.n, b.graph.num_copies()) == (hexagon_pair().n, hexagon_pair().num_copies())
    assert oracle_exists_proper(b.graph) is None
    assert oracle_exists_proper(b.graph, (1, 2)) is not None


@pytest.mark.parametrize("attach", [(0, 0), (1, 4), (3, 5), (2, 2)])
def test_bad_path_any_attachment_vertex(attach):
    b = construct(BadPath(1, 0, (Cycle(6), Cycle(6)), attach), verify=False)
    assert oracle_exists_proper(b.graph) is None


def test_bad_path_longer_path():
    # length 5 and s = 1: the six path vertices get 2+1+1+1+1+2 bad graphs
    b = construct(BadPath(5, 1, (K2(),) * 8))
    assert b.graph.n == 6 + 16 and is_bad_tree(b.graph)


def test_bad_path_parameter_checks():
    with pytest.raises(InvalidSpec):
        BadPath(3, 0, (K2(), K2())).claim()
    with pytest.raises(InvalidSpec):
        BadPath(1, 0, (K2(),)).claim()


def test_glue():
    b = construct(BadGlue(P6_SPEC, P6_SPEC))
    assert b.graph.n == 10 and is_bad_tree(b.graph)


def test_gvs3_small():
    spec = GvS3(0, P3_SPEC, P3_SPEC)
    b = construct(spec)
    assert vertex_status(b.graph, b.vertex).pair == (0, 3)
    s1a = GvS1a(1, spec, P3_SPEC)
    b = construct(s1a)
    assert vertex_status(b.graph, b.vertex).pair == (1, 2)


def test_text_roundtrip_examples():
    text = "(bad-from-gvs1 1 (gvs1b 1 () ((k2))))"
    assert parse_spec(text) == P6_SPEC
    assert format_spec(P6_SPEC) == text
    for bad in ["(k3)", "(gvs1b x () ())", "(k2", "(k2) (k2)", "(cycle)"]:
        with pytest.raises(InvalidSpec):
            parse_spec(bad)


@given(st.integers(0, 2**32), st.sampled_from(["bad", "s1", "s3", "minus"]))
def test_sampler_specs_hold_their_claims(seed, kind):
    sampler = SpecSampler(seed)
    spec = {
        "bad": lambda: sampler.bad(24),
        "s1": lambda: sampler.pair_s1(sampler.rng.randint(0, 2), 24),
        "s3": lambda: sampler.pair_s3(sampler.rng.randint(0, 1), 30),
        "minus": lambda: sampler.minus(20),
    }[kind]()
    if spec is None:
        return
    assert parse_spec(format_spec(spec)) == spec
    b = construct(spec, verify=False)
    assert b.graph.n == spec_size(spec)
    assert actual_claim(b) == spec.claim()
    if b.graph.n <= 13 and spec.claim()[0] == "pair":
        _, a, c = spec.claim()
        v = b.vertex
        assert achievable_degree_set(b.graph, v) == {a}
        assert achievable_degree_set(b.graph, v, increments={v: 1}) == {c}


def test_p6_decompositions():
    found = bad_tree_decompositions(path(6))
    assert found and all(d[0] == "a" and d[1] == 1 for d in found)


@pytest.mark.parametrize("n", range(2, 10))
def test_every_small_bad_tree_decomposes(n):
    for t in enumerate_trees(n):
        if is_bad_tree(t) and n >= 3:
            assert bad_tree_decompositions(t), t
