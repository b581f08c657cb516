"""Undirected multigraphs on dense integer vertices and structural queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import Disconnected, NonBipartite, ParseError


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class MultiGraph:
    """Immutable multigraph on vertices ``0..n-1``.

    Parallel edges are stored as a multiplicity per unordered pair.  Every
    parallel copy of a pair counts towards the degree of its endpoints.
    """

    __slots__ = ("n", "_mult", "_adj", "_copies", "_hash")

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 0:
            raise ValueError("negative vertex count")
        mult: dict[tuple[int, int], int] = {}
        for e in edges:
            if len(e) == 2:
                u, v = e
                k = 1
            else:
                u, v, k = e
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            if k < 1:
                raise ValueError(f"multiplicity {k} < 1 on {u}-{v}")
            p = _key(u, v)
            mult[p] = mult.get(p, 0) + k
        self.n = n
        self._mult = dict(sorted(mult.items()))
        adj: list[dict[int, int]] = [{} for _ in range(n)]
        for (u, v), k in self._mult.items():
            adj[u][v] = k
            adj[v][u] = k
        self._adj = adj
        self._copies = None
        self._hash = None

    # basic queries

    def pairs(self) -> list[tuple[int, int]]:
        return list(self._mult)

    def items(self) -> list[tuple[tuple[int, int], int]]:
        return list(self._mult.items())

    def multiplicity(self, u: int, v: int) -> int:
        return self._mult.get(_key(u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return _key(u, v) in self._mult

    def degree(self, v: int) -> int:
        return sum(self._adj[v].values())

    def neighbours(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def num_pairs(self) -> int:
        return len(self._mult)

    def num_copies(self) -> int:
        return sum(self._mult.values())

    def copies(self) -> list[tuple[int, int, int]]:
        """Every parallel edge copy as ``(u, v, index)`` in canonical order."""
        if self._copies is None:
            self._copies = [(u, v, i) for (u, v), k in self._mult.items() for i in range(k)]
        return list(self._copies)

    def is_simple(self) -> bool:
        return all(k == 1 for k in self._mult.values())

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    # derived graphs

    def with_edges(self, edges: Iterable) -> MultiGraph:
        return MultiGraph(self.n, [(u, v, k) for (u, v), k in self._mult.items()] + list(edges))

    def without_edge(self, u: int, v: int, count: int = 1) -> MultiGraph:
        p = _key(u, v)
        k = self._mult.get(p, 0)
        if k < count:
            raise ValueError(f"graph has only {k} copies of {p}")
        items = [(a, b, m) for (a, b), m in self._mult.items() if (a, b) != p]
        if k > count:
            items.append((p[0], p[1], k - count))
        return MultiGraph(self.n, items)

    def without_vertices(self, vs: Iterable[int]) -> MultiGraph:
        """Drop every edge at ``vs``; vertex ids are kept (the vertices become isolated)."""
        drop = set(vs)
        return MultiGraph(
            self.n, [(u, v, k) for (u, v), k in self._mult.items() if u not in drop and v not in drop]
        )

    def with_multiplicity(self, u: int, v: int, k: int) -> MultiGraph:
        p = _key(u, v)
        items = [(a, b, m) for (a, b), m in self._mult.items() if (a, b) != p]
        if k > 0:
            items.append((p[0], p[1], k))
        return MultiGraph(self.n, items)

    def with_vertices(self, extra: int) -> MultiGraph:
        return MultiGraph(self.n + extra, [(u, v, k) for (u, v), k in self._mult.items()])

    def induced(self, vertices: Iterable[int]) -> tuple[MultiGraph, list[int]]:
        """Subgraph induced on ``vertices``, relabelled ``0..``; returns (graph, old ids)."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [
            (index[u], index[v], k) for (u, v), k in self._mult.items() if u in index and v in index
        ]
        return MultiGraph(len(old), edges), old

    def relabel(self, mapping, n: int | None = None) -> MultiGraph:
        n = self.n if n is None else n
        return MultiGraph(n, [(mapping[u], mapping[v], k) for (u, v), k in self._mult.items()])

    def disjoint_union(self, other: MultiGraph) -> MultiGraph:
        off = self.n
        edges = [(u, v, k) for (u, v), k in self._mult.items()]
        edges += [(u + off, v + off, k) for (u, v), k in other._mult.items()]
        return MultiGraph(self.n + other.n, edges)

    # connectivity

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.is_simple() and self.num_pairs() == self.n - 1 and self.is_connected()

    def is_bipartite(self) -> bool:
        try:
            two_colouring(self)
        except NonBipartite:
            return False
        return True

    # dunder

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self._mult == other._mult

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, tuple(self._mult.items())))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{u}-{v}" + (f"x{k}" if k > 1 else "") for (u, v), k in self._mult.items())
        return f"MultiGraph(n={self.n}, [{body}])"


# text I/O


def parse_edge_list(text: str | bytes) -> MultiGraph:
    """Parse the ``p <n> <m>`` edge-list format (``u v`` or ``u v k`` lines)."""
    if isinstance(text, bytes):
        text = text.decode()
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "p" or len(parts) != 3:
                raise ParseError("expected header 'p <n> <m>'", lineno)
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("non-integer header field", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("negative header field", lineno)
            continue
        if len(parts) not in (2, 3):
            raise ParseError(f"malformed edge line {line!r}", lineno)
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        u, v = nums[0], nums[1]
        k = nums[2] if len(nums) == 3 else 1
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range 0..{n - 1}", lineno)
        if k < 1:
            raise ParseError("multiplicity must be at least 1", lineno)
        edges.append((u, v, k))
    if n is None:
        raise ParseError("missing header 'p <n> <m>'")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edge lines, found {len(edges)}")
    return MultiGraph(n, edges)


def serialize_edge_list(g: MultiGraph) -> str:
    lines = [f"p {g.n} {g.num_pairs()}"]
    for (u, v), k in g.items():
        lines.append(f"{u} {v}" if k == 1 else f"{u} {v} {k}")
    return "\n".join(lines) + "\n"


def to_dot(g: MultiGraph) -> str:
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(g.n)]
    for u, v, _ in g.copies():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# bipartition


@dataclass(frozen=True)
class Bipartition:
    """Side of every vertex: 0 for X, 1 for Y."""

    side: tuple[int, ...]

    @property
    def X(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == 0]

    @property
    def Y(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == 1]

    def same_side(self, u: int, v: int) -> bool:
        return self.side[u] == self.side[v]


def two_colouring(g: MultiGraph) -> list[int]:
    """BFS 2-colouring of every component; the smallest vertex of each component gets side 0."""
    side = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbours(x):
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    queue.append(y)
                elif side[y] == side[x]:
                    raise NonBipartite(_odd_cycle(parent, x, y))
    return side


def _odd_cycle(parent: list[int], x: int, y: int) -> list[int]:
    def chain(v):
        out = [v]
        while parent[v] != -1:
            v = parent[v]
            out.append(v)
        return out

    px, py = chain(x), chain(y)
    common = set(px) & set(py)
    left = []
    for v in px:
        left.append(v)
        if v in common:
            break
    right = []
    for v in py:
        if v == left[-1]:
            break
        right.append(v)
    return left + right[::-1]


def bipartition(g: MultiGraph) -> Bipartition:
    if not g.is_connected():
        raise Disconnected("bipartition requires a connected graph")
    return Bipartition(tuple(two_colouring(g)))


# bridges


def bridges(g: MultiGraph) -> set[tuple[int, int]]:
    """Cut edges by the lowpoint method.  A pair of multiplicity >= 2 is never a bridge."""
    order = [-1] * g.n
    low = [0] * g.n
    found: set[tuple[int, int]] = set()
    counter = 0
    for root in range(g.n):
        if order[root] != -1:
            continue
        order[root] = low[root] = counter
        counter += 1
        # frames: (vertex, parent, neighbour iterator)
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.neighbours(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if order[w] == -1:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(g.neighbours(w))))
                    advanced = True
                    break
                if w != parent or g.multiplicity(v, w) > 1:
                    low[v] = min(low[v], order[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] > order[parent] and g.multiplicity(parent, v) == 1:
                    found.add(_key(parent, v))
    return found


def bridges_naive(g: MultiGraph) -> set[tuple[int, int]]:
    """Delete-and-test reference for :func:`bridges`."""
    base = len(g.components())
    return {
        p for p, k in g.items() if k == 1 and len(g.without_edge(*p).components()) > base
    }


# suspended paths


@dataclass(frozen=True)
class SuspendedPath:
    """A maximal chain whose internal vertices have degree 2 and two distinct neighbours.

    ``closed`` marks a suspended cycle (first vertex equals the last).  ``degenerate``
    marks a chain with an endpoint of degree below 3, which happens for bare paths and
    cycles and for chains ending in a leaf.
    """

    vertices: tuple[int, ...]
    closed: bool = False
    degenerate: bool = False

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def internal(self) -> tuple[int, ...]:
        return self.vertices[1:-1]


def suspended_paths(g: MultiGraph) -> list[SuspendedPath]:
    def internal(v):
        return g.degree(v) == 2 and len(g._adj[v]) == 2

    seen: set[int] = set()
    out = []
    for s in range(g.n):
        if internal(s):
            continue
        for x in g.neighbours(s):
            if not internal(x) or x in seen:
                continue
            walk = [s, x]
            prev, cur = s, x
            while internal(cur):
                a, b = g.neighbours(cur)
                nxt = b if a == prev else a
                walk.append(nxt)
                prev, cur = cur, nxt
            seen.update(walk[1:-1])
            t = walk[-1]
            out.append(
                SuspendedPath(tuple(walk), closed=(t == s), degenerate=g.degree(s) < 3 or g.degree(t) < 3)
            )
    for s in range(g.n):
        if internal(s) and s not in seen:
            # a component that is a bare cycle
            walk = [s]
            prev, cur = -1, s
            while True:
                a, b = g.neighbours(cur)
                nxt = a if a != prev else b
                walk.append(nxt)
                if nxt == s:
                    break
                prev, cur = cur, nxt
            seen.update(walk)
            out.append(SuspendedPath(tuple(walk), closed=True, degenerate=True))
    return out
