"""Parity factors and the weightings built from them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .errors import BothSidesOdd, Disconnected, NonBipartite, OddTotal, PreconditionViolated
from .graph import Bipartition, MultiGraph, bipartition, bridges
from .weighting import Weighting, as_pair


def f_factor_mod2(g: MultiGraph, f) -> set[tuple[int, int, int]]:
    """Edge copies whose degrees match ``f`` modulo 2 at every vertex.

    Uses the BFS tree from vertex 0; non-tree copies are never chosen.  Tree edges
    are fixed leaf-first: each vertex decides its parent edge.
    """
    f = [int(x) & 1 for x in (f if not isinstance(f, dict) else [f.get(v, 0) for v in range(g.n)])]
    if len(f) != g.n:
        raise ValueError("target must cover every vertex")
    if sum(f) % 2:
        raise OddTotal("sum of parity targets is odd")
    if g.n == 0:
        return set()
    if not g.is_connected():
        raise Disconnected("f-factor requires a connected graph")
    parent = [-1] * g.n
    order = [0]
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in g.neighbours(x):
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                order.append(y)
                queue.append(y)
    need = list(f)
    chosen = set()
    for v in reversed(order[1:]):
        if need[v]:
            p = parent[v]
            chosen.add((min(p, v), max(p, v), 0))
            need[v] = 0
            need[p] ^= 1
    return chosen


def subset_degrees(g: MultiGraph, subset) -> list[int]:
    deg = [0] * g.n
    for u, v, _ in subset:
        deg[u] += 1
        deg[v] += 1
    return deg


def parity_weighting(g: MultiGraph, target, pair=(0, 1), increments=None) -> Weighting:
    """Weighting whose weighted degrees have parity ``target[v]`` (pair of distinct parity)."""
    pair = as_pair(pair)
    if not pair.distinct_parity():
        raise ValueError("parity weightings need weights of distinct parity")
    inc = increments or [0] * g.n
    if isinstance(inc, dict):
        inc = [inc.get(v, 0) for v in range(g.n)]
    # weighted degree = a*deg + (b - a)*h + inc, and b - a is odd
    f = [(target[v] - pair.a * g.degree(v) - inc[v]) % 2 for v in range(g.n)]
    h = f_factor_mod2(g, f)
    return Weighting.from_subset(g, h, pair, increments)


def parity_proper_weighting(g: MultiGraph, bp: Bipartition | None = None, pair=(0, 1)) -> Weighting:
    """Proper weighting where the even-sized side gets odd degrees and the other side even."""
    if not g.is_connected():
        raise Disconnected("parity weighting requires a connected graph")
    bp = bp or bipartition(g)
    x, y = bp.X, bp.Y
    if len(x) % 2 and len(y) % 2:
        raise BothSidesOdd(f"sides have sizes {len(x)} and {len(y)}")
    odd_side = 0 if len(x) % 2 == 0 else 1
    target = [int(bp.side[v] == odd_side) for v in range(g.n)]
    return parity_weighting(g, target, pair)


# removing one edge per vertex while keeping the graph connected


@dataclass(frozen=True)
class Exceptional:
    """The obstruction where no choice of edges keeps the graph connected."""

    components: tuple[tuple[int, ...], ...]


def _connected_without(g: MultiGraph, removed) -> bool:
    h = g
    for u, v, _ in removed:
        h = h.without_edge(u, v)
    return h.is_connected()


def _live_components(g: MultiGraph, gone: set[int]) -> list[list[int]]:
    alive = [v for v in range(g.n) if v not in gone]
    sub, old = g.induced(alive)
    return [[old[i] for i in comp] for comp in sub.components()]


def remove_edges_connected(g: MultiGraph, A, q: int):
    """Pick one incident copy per vertex of ``A`` so that deleting them keeps ``g`` connected.

    Returns ``{a: (u, v, copy)}`` or an :class:`Exceptional` when the single
    obstruction occurs.
    """
    A = sorted(set(A))
    if not A:
        return {}
    if q < 4:
        raise PreconditionViolated("q must be at least 4")
    if len(A) > q:
        raise PreconditionViolated(f"|A| = {len(A)} exceeds q = {q}")
    if not g.is_connected():
        raise PreconditionViolated("graph is not connected")
    aset = set(A)
    for a in A:
        if any(b in aset for b in g.neighbours(a)):
            raise PreconditionViolated("A is not independent")
    degs = [g.degree(a) for a in A]
    if not (all(d >= q - 1 for d in degs) or sum(d < q for d in degs) <= 1):
        raise PreconditionViolated("degree condition fails for A")
    br = bridges(g)
    for a in A:
        if any(a in p for p in br):
            raise PreconditionViolated(f"vertex {a} of A is incident to a bridge")

    if len(A) == 4 and q == 4 and all(d == 3 for d in degs):
        comps = _live_components(g, aset)
        if len(comps) == 6 and all(
            len({a for v in comp for a in g.neighbours(v) if a in aset}) == 2 for comp in comps
        ):
            return Exceptional(tuple(tuple(c) for c in comps))

    options = []
    for a in A:
        opts = []
        for b in g.neighbours(a):
            u, v = min(a, b), max(a, b)
            opts.append((u, v, 0))
        options.append(opts)
    for pick in product(*options):
        if _connected_without(g, pick):
            return dict(zip(A, pick))
    raise PreconditionViolated("no connected choice exists; the hypotheses do not hold")


def is_cutvertex(g: MultiGraph, v: int) -> bool:
    before = len([c for c in g.components() if v not in c])
    h = g.without_vertices([v])
    after = len([c for c in h.components() if c != [v]])
    # the component of v must fall into at least two pieces
    return after >= before + 2


def local_max_weighting(g: MultiGraph, w0: int) -> Weighting:
    """Proper weighting with weight 1 on every edge at ``w0``.

    ``w0`` must have degree at least 4, be no cutvertex and have no neighbour of
    larger degree.  The only parity conflicts left are between ``w0`` and its
    neighbours, and ``w0`` out-weighs each of them.
    """
    if not g.is_simple():
        raise PreconditionViolated("graph is not simple")
    if not g.is_connected():
        raise PreconditionViolated("graph is not connected")
    try:
        bp = bipartition(g)
    except NonBipartite:
        raise PreconditionViolated("graph is not bipartite") from None
    if len(bp.X) % 2 == 0 or len(bp.Y) % 2 == 0:
        raise PreconditionViolated("a bipartition side has even size")
    d = g.degree(w0)
    if d < 4:
        raise PreconditionViolated(f"w0 has degree {d} < 4")
    if is_cutvertex(g, w0):
        raise PreconditionViolated("w0 is a cutvertex")
    nbrs = g.neighbours(w0)
    if any(g.degree(x) > d for x in nbrs):
        raise PreconditionViolated("w0 does not have local maximum degree")
    A = [x for x in nbrs if g.degree(x) == d]
    rest = g.without_vertices([w0])
    rest_br = bridges(rest)
    if any(a in p for a in A for p in rest_br):
        raise PreconditionViolated("a same-degree neighbour of w0 is incident to a bridge of G - w0")

    # G - w0 with w0 dropped from the vertex set
    keep = [v for v in range(g.n) if v != w0]
    sub, old = g.induced(keep)
    new = {v: i for i, v in enumerate(old)}
    picked = remove_edges_connected(sub, [new[a] for a in A], d) if A else {}
    if isinstance(picked, Exceptional):
        raise PreconditionViolated("edge removal hits the exceptional configuration")
    reduced = sub
    for u, v, _ in picked.values():
        reduced = reduced.without_edge(u, v)

    w0_side = bp.side[w0]
    nset = set(nbrs)
    even = d % 2 == 0
    target = []
    for i, v in enumerate(old):
        same = bp.side[v] == w0_side
        in_n = v in nset
        odd = same or in_n if even else not (same or in_n)
        target.append(int(odd))
    h = f_factor_mod2(reduced, target)
    high = {(old[u], old[v]) for u, v, _ in h}
    high |= {(min(w0, x), max(w0, x)) for x in nbrs}
    return Weighting.from_subset(g, {(u, v, 0) for u, v in high})
