"""Polynomial classification of trees by dynamic programming over rooted subtrees."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .errors import DegreeNotOne, NonBridgeAtNeighbour, NotATree
from .graph import MultiGraph, bridges, two_colouring
from .weighting import Weighting, as_increments, as_pair


def _require_tree(t: MultiGraph) -> None:
    if not t.is_tree():
        raise NotATree("input is not a simple tree")


@dataclass
class RootedProfile:
    """Feasibility table of a rooted tree.

    ``table[v][p]`` maps each achievable final weighted degree of ``v`` (parent edge
    high if ``p == 1``) to the number of high edges at ``v``.  A degree is achievable
    when the subtree of ``v`` has a weighting, proper on the subtree, that gives
    ``v`` that degree.  The root only has ``p == 0``.
    """

    root: int
    parent: list[int]
    children: list[list[int]]
    table: list[dict[int, dict[int, int]]]
    pair: tuple[int, int]
    increments: tuple[int, ...]

    def feasible(self, v: int, p: int, degree: int) -> bool:
        return degree in self.table[v].get(p, {})

    def degrees(self, v: int, p: int = 0) -> set[int]:
        return set(self.table[v].get(p, {}))

    def root_degrees(self) -> set[int]:
        return self.degrees(self.root, 0)


def _rooted(t: MultiGraph, root: int):
    parent = [-1] * t.n
    children: list[list[int]] = [[] for _ in range(t.n)]
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in t.neighbours(x):
            if y not in seen:
                seen.add(y)
                parent[y] = x
                children[x].append(y)
                order.append(y)
                queue.append(y)
    return parent, children, order


def profile(t: MultiGraph, root: int, increments=None, pair=(0, 1)) -> RootedProfile:
    _require_tree(t)
    pr = as_pair(pair)
    a, b = pr.a, pr.b
    inc = as_increments(t, increments)
    parent, children, order = _rooted(t, root)
    table: list[dict[int, dict[int, int]]] = [{} for _ in range(t.n)]
    for v in reversed(order):
        kids = children[v]
        has_parent = parent[v] != -1
        deg = len(kids) + has_parent
        base = a * deg + inc[v]
        for p in (0, 1) if has_parent else (0,):
            row: dict[int, int] = {}
            for k in range(len(kids) + 1):
                value = base + (b - a) * (k + p)
                forced_high = 0
                free = 0
                ok = True
                for c in kids:
                    low = any(d != value for d in table[c][0])
                    high = any(d != value for d in table[c][1])
                    if low and high:
                        free += 1
                    elif high:
                        forced_high += 1
                    elif not low:
                        ok = False
                        break
                if ok and forced_high <= k <= forced_high + free:
                    row[value] = k + p
            table[v][p] = row
    return RootedProfile(root, parent, children, table, (a, b), inc)


def witness_from_profile(t: MultiGraph, prof: RootedProfile) -> Weighting | None:
    """Rebuild a proper weighting top-down; smallest degrees and lowest ids first."""
    if not prof.root_degrees():
        return None
    high_edges = set()
    stack = [(prof.root, 0, min(prof.root_degrees()))]
    while stack:
        v, p, value = stack.pop()
        k = prof.table[v][p][value] - p
        kids = prof.children[v]
        choice = {}
        free = []
        for c in kids:
            low = any(d != value for d in prof.table[c][0])
            high = any(d != value for d in prof.table[c][1])
            if low and high:
                free.append(c)
            else:
                choice[c] = 1 if high else 0
        need = k - sum(choice.values())
        for i, c in enumerate(free):
            choice[c] = 1 if i < need else 0
        for c in kids:
            pc = choice[c]
            if pc:
                high_edges.add((min(v, c), max(v, c), 0))
            dc = min(d for d in prof.table[c][pc] if d != value)
            stack.append((c, pc, dc))
    return Weighting.from_subset(t, high_edges, prof.pair, prof.increments)


@dataclass
class TreeClass:
    good: bool
    witness: Weighting | None = None

    @property
    def bad(self) -> bool:
        return not self.good


def classify_tree(t: MultiGraph, pair=(0, 1), increments=None) -> TreeClass:
    prof = profile(t, 0, increments, pair)
    w = witness_from_profile(t, prof)
    return TreeClass(w is not None, w)


def is_bad_tree(t: MultiGraph) -> bool:
    return not profile(t, 0).root_degrees()


@dataclass(frozen=True)
class VertexStatus:
    S0: frozenset[int]
    S1: frozenset[int]
    label: str  # "bad", "gv_minus", "gv_pair" or "unconstrained"

    @property
    def pair(self) -> tuple[int, int] | None:
        if self.label != "gv_pair":
            return None
        return (next(iter(self.S0)), next(iter(self.S1)))

    def __str__(self):
        if self.label == "gv_pair":
            return "G_v(%d,%d)" % self.pair
        return {"bad": "bad", "gv_minus": "G_v(-)", "unconstrained": "unconstrained"}[self.label]


def status_label(S0, S1, sides: tuple[int, int]) -> str:
    x, y = sides
    if not S0:
        return "bad"
    if not S1 and x % 2 == 0 and y % 2 == 0:
        return "gv_minus"
    if len(S0) == 1 and len(S1) == 1 and (x + y) % 2 == 1:
        return "gv_pair"
    return "unconstrained"


def vertex_status(t: MultiGraph, v: int) -> VertexStatus:
    s0 = profile(t, v).root_degrees()
    s1 = profile(t, v, {v: 1}).root_degrees()
    side = two_colouring(t)
    sides = (side.count(0), side.count(1))
    return VertexStatus(frozenset(s0), frozenset(s1), status_label(s0, s1, sides))


# degree-1 decomposition


def decompose_at_degree1(g: MultiGraph, v: int) -> list[MultiGraph]:
    """For each further edge ``e_i`` at the neighbour ``v'`` of ``v``: the side of
    ``G - e_i`` away from ``v``, with ``v'``, ``v`` and both edges put back.

    In each returned graph the far component keeps its vertex order, then
    ``v'`` and ``v`` follow.
    """
    if g.degree(v) != 1:
        raise DegreeNotOne(f"vertex {v} has degree {g.degree(v)}")
    (vp,) = g.neighbours(v)
    br = bridges(g)
    at_vp = [(min(vp, x), max(vp, x)) for x in g.neighbours(vp)]
    if any(g.multiplicity(*p) > 1 or p not in br for p in at_vp):
        raise NonBridgeAtNeighbour(f"not every edge at {vp} is a bridge")
    out = []
    for x in g.neighbours(vp):
        if x == v:
            continue
        cut = g.without_edge(vp, x)
        comp = next(c for c in cut.components() if x in c)
        sub, old = g.induced(comp)
        k = len(old)
        gi = sub.with_vertices(2).with_edges([(k, k + 1), (k, old.index(x))])
        out.append(gi)
    return out


def add_pendant_path(g: MultiGraph, v: int, length: int = 2) -> MultiGraph:
    h = g.with_vertices(length)
    prev = v
    edges = []
    for i in range(length):
        edges.append((prev, g.n + i))
        prev = g.n + i
    return h.with_edges(edges)


# free tree enumeration by canonical level sequences


def _next_rooted(layout: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    out = list(layout)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(layout: list[int]) -> tuple[list[int], list[int]]:
    ones = [i for i, x in enumerate(layout) if x == 1]
    m = ones[1] if len(ones) > 1 else len(layout)
    left = [x - 1 for x in layout[1:m]]
    rest = [0] + layout[m:]
    return left, rest


def _next_free(layout: list[int]) -> list[int] | None:
    left, rest = _split(layout)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return layout
    p = len(left)
    nxt = _next_rooted(layout, p)
    if nxt is not None and layout[p] > 2:
        new_left, _ = _split(nxt)
        suffix = list(range(1, max(new_left) + 2))
        nxt[-len(suffix):] = suffix
    return nxt


def _layout_to_tree(layout: list[int]) -> MultiGraph:
    edges = []
    stack: list[int] = []
    for v, level in enumerate(layout):
        while len(stack) > level:
            stack.pop()
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return MultiGraph(len(layout), edges)


def enumerate_trees(n: int) -> Iterator[MultiGraph]:
    """Every free tree on ``n`` vertices exactly once (1 <= n <= 16)."""
    if not 1 <= n <= 16:
        raise ValueError("n must lie in 1..16")
    if n == 1:
        yield MultiGraph(1)
        return
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_free(layout)
        if layout is not None:
            yield _layout_to_tree(layout)
            layout = _next_rooted(layout)


def canonical_tree_form(t: MultiGraph) -> str:
    """Isomorphism invariant of a tree: AHU string rooted at the centre(s)."""
    _require_tree(t)
    if t.n == 1:
        return "()"
    degree = [t.degree(v) for v in range(t.n)]
    leaves = [v for v in range(t.n) if degree[v] <= 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for leaf in leaves:
            for y in t.neighbours(leaf):
                degree[y] -= 1
                if degree[y] == 1:
                    nxt.append(y)
            degree[leaf] = 0
        leaves = nxt
    centres = leaves

    def encode(v, parent):
        return "(" + "".join(sorted(encode(c, v) for c in t.neighbours(v) if c != parent)) + ")"

    return min(encode(c, -1) for c in centres)
