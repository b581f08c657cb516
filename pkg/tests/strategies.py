"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from nsdweights.graph import MultiGraph


@st.composite
def multigraphs(draw, max_n=8, max_pairs=12, max_mult=3, connected=False):
    n = draw(st.integers(min_value=2 if connected else 1, max_value=max_n))
    edges = []
    if connected:
        for v in range(1, n):
            edges.append((draw(st.integers(0, v - 1)), v, draw(st.integers(1, max_mult))))
    if n >= 2:
        extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1),
                                        st.integers(1, max_mult)), max_size=max_pairs))
        edges += [(u, v, k) for u, v, k in extra if u != v]
    return MultiGraph(n, edges)


@st.composite
def small_copies_graphs(draw, max_copies=12, connected=True):
    g = draw(multigraphs(max_n=7, max_pairs=6, max_mult=2, connected=connected))
    while g.num_copies() > max_copies:
        (u, v), _ = g.items()[-1]
        g = g.without_edge(u, v)
    return g
