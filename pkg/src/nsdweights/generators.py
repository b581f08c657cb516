"""Named graph families and seeded random instances."""

from __future__ import annotations

from .graph import MultiGraph, two_colouring
from .rng import SplitMix64


def path(n: int) -> MultiGraph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return MultiGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> MultiGraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> MultiGraph:
    """Star on ``n`` vertices, centre 0."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return MultiGraph(n, [(0, i) for i in range(1, n)])


def complete_bipartite(p: int, q: int) -> MultiGraph:
    return MultiGraph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def theta(*lengths: int) -> MultiGraph:
    """Two hubs 0 and 1 joined by internally disjoint paths of the given lengths."""
    edges = []
    n = 2
    for length in lengths:
        if length < 1:
            raise ValueError("path length must be positive")
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, 1))
    return MultiGraph(n, edges)


def hexagon_pair() -> MultiGraph:
    """Two 6-cycles joined by a path of length 3 (14 vertices, 15 edges)."""
    edges = [(i, (i + 1) % 6) for i in range(6)]
    edges += [(6 + i, 6 + (i + 1) % 6) for i in range(6)]
    edges += [(0, 12), (12, 13), (13, 6)]
    return MultiGraph(14, edges)


def random_tree(n: int, seed: int) -> MultiGraph:
    """Uniform labelled tree from a random Pruefer sequence."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n <= 2:
        return path(n)
    rng = SplitMix64(seed)
    code = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    edges = []
    for x in code:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return MultiGraph(n, edges)


def random_connected_multigraph(n: int, extra: int, seed: int, max_mult: int = 3) -> MultiGraph:
    """Random tree plus ``extra`` random edges; multiplicities up to ``max_mult``."""
    rng = SplitMix64(seed)
    base = random_tree(n, rng.next_u64())
    edges = [(u, v, rng.randint(1, max_mult)) for u, v in base.pairs()]
    if n >= 2:
        for _ in range(extra):
            u = rng.below(n)
            v = rng.below(n - 1)
            if v >= u:
                v += 1
            edges.append((u, v, 1))
    return MultiGraph(n, edges)


def random_bridgeless_bipartite(n: int, m: int, seed: int, attempts: int = 200) -> MultiGraph:
    """Simple connected bipartite bridgeless graph with ``n`` vertices and ``m`` edges.

    Built by an ear decomposition: an even cycle, then ``m - n`` ears whose lengths
    respect the sides of their endpoints.
    """
    if n < 4 or m < n:
        raise ValueError(f"no bridgeless bipartite graph with n={n}, m={m}")
    max_edges = (n // 2) * (n - n // 2)
    if m > max_edges:
        raise ValueError(f"no simple bipartite graph with n={n}, m={m}")
    if m == n and n % 2:
        raise ValueError("a bipartite cycle needs an even number of vertices")
    rng = SplitMix64(seed)
    for _ in range(attempts):
        g = _try_ears(n, m, rng)
        if g is not None:
            return g
    raise ValueError(f"failed to build a bridgeless bipartite graph with n={n}, m={m}")


def _try_ears(n: int, m: int, rng: SplitMix64) -> MultiGraph | None:
    ears = m - n
    if ears == 0:
        return cycle(n)
    top = n if n % 2 == 0 else n - 1
    length = 2 * rng.randint(2, top // 2)
    edges = {(i, (i + 1) % length) if i < (i + 1) % length else ((i + 1) % length, i) for i in range(length)}
    side = [i % 2 for i in range(length)]
    size = length
    remaining = n - length
    for k in range(ears):
        last = k == ears - 1
        if last:
            inner = remaining
        else:
            # bias towards short ears so that later ears still fit
            inner = min(remaining, rng.below(3) if rng.random() < 0.7 else rng.below(remaining + 1))
        want_same = inner % 2 == 1
        candidates = [
            (u, v)
            for u in range(size)
            for v in range(u + 1, size)
            if (side[u] == side[v]) == want_same and (inner > 0 or (u, v) not in edges)
        ]
        if not candidates:
            return None
        u, v = rng.choice(candidates)
        prev = u
        for _ in range(inner):
            side.append(1 - side[prev])
            edges.add((prev, size) if prev < size else (size, prev))
            prev = size
            size += 1
        edges.add((prev, v) if prev < v else (v, prev))
        remaining -= inner
    if size != n or len(edges) != m:
        return None
    g = MultiGraph(n, sorted(edges))
    two_colouring(g)
    return g


FAMILIES = ("path", "cycle", "star", "random_tree", "random_bridgeless_bipartite", "hexagon_pair")


def generate_family(family: str, n: int = 0, m: int = 0, seed: int = 0) -> MultiGraph:
    if family == "path":
        return path(n)
    if family == "cycle":
        return cycle(n)
    if family == "star":
        return star(n)
    if family == "random_tree":
        return random_tree(n, seed)
    if family == "random_bridgeless_bipartite":
        return random_bridgeless_bipartite(n, m, seed)
    if family == "hexagon_pair":
        return hexagon_pair()
    raise ValueError(f"unknown family {family!r}")
