"""Odd multi-cacti: construction from recipes, recognition with certificates.

A recipe is a tree of cycles.  Cycle ``c`` has length ``= 2 (mod 4)`` and its edge
``i`` joins local vertices ``i`` and ``i + 1``; even-indexed edges are green and
odd-indexed edges are red.  A non-root cycle identifies its edge 0 (local
vertices 0 and 1, in that order) with the green edge ``paste`` of its parent.
Green edges may carry any multiplicity; the multiplicity of a pasted edge is
set on the parent.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

from .errors import InvalidRecipe, IsK2, NotOMC, NotSimpleOMC
from .graph import MultiGraph, two_colouring
from .rng import SplitMix64
from .weighting import Weighting, weighted_degrees


@dataclass
class CycleSpec:
    length: int
    parent: int | None = None
    paste: int = 0
    mult: dict[int, int] = field(default_factory=dict)


@dataclass
class CactusRecipe:
    cycles: list[CycleSpec] = field(default_factory=list)
    k2: int | None = None


@dataclass
class Expansion:
    graph: MultiGraph
    cycle_vertices: list[list[int]]
    green: set[tuple[int, int]]


def _pair(u, v):
    return (u, v) if u < v else (v, u)


def expand(recipe: CactusRecipe) -> Expansion:
    if recipe.k2 is not None:
        if recipe.cycles:
            raise InvalidRecipe("a K2 base cannot carry cycles")
        if recipe.k2 < 1:
            raise InvalidRecipe("multiplicity must be at least 1")
        return Expansion(MultiGraph(2, [(0, 1, recipe.k2)]), [], {(0, 1)})
    if not recipe.cycles:
        raise InvalidRecipe("empty recipe")
    cycle_vertices: list[list[int]] = []
    mult: dict[tuple[int, int], int] = {}
    green: set[tuple[int, int]] = set()
    n = 0
    for idx, c in enumerate(recipe.cycles):
        if c.length < 6 or c.length % 4 != 2:
            raise InvalidRecipe(f"cycle {idx} has length {c.length}, not 2 mod 4")
        for e, k in c.mult.items():
            if not (0 <= e < c.length) or e % 2:
                raise InvalidRecipe(f"cycle {idx}: multiplicity on non-green edge {e}")
            if k < 1:
                raise InvalidRecipe(f"cycle {idx}: multiplicity {k} < 1")
        if c.parent is None:
            if idx != 0:
                raise InvalidRecipe("only the first cycle may be the root")
            vs = list(range(n, n + c.length))
            n += c.length
        else:
            if not (0 <= c.parent < idx):
                raise InvalidRecipe(f"cycle {idx} must paste onto an earlier cycle")
            parent = recipe.cycles[c.parent]
            if c.paste % 2 or not (0 <= c.paste < parent.length):
                raise InvalidRecipe(f"cycle {idx} pastes onto non-green edge {c.paste}")
            if 0 in c.mult:
                raise InvalidRecipe(f"cycle {idx}: set the multiplicity of a pasted edge on the parent")
            pv = cycle_vertices[c.parent]
            a, b = pv[c.paste], pv[(c.paste + 1) % len(pv)]
            vs = [a, b] + list(range(n, n + c.length - 2))
            n += c.length - 2
        cycle_vertices.append(vs)
        L = c.length
        for i in range(L):
            p = _pair(vs[i], vs[(i + 1) % L])
            if i % 2 == 0:
                green.add(p)
                if c.parent is None or i > 0:
                    mult[p] = c.mult.get(i, 1)
            else:
                mult[p] = 1
    return Expansion(MultiGraph(n, [(u, v, k) for (u, v), k in mult.items()]), cycle_vertices, green)


def build_from_recipe(recipe: CactusRecipe) -> MultiGraph:
    return expand(recipe).graph


# text format


def serialize_recipe(recipe: CactusRecipe) -> str:
    if recipe.k2 is not None:
        return f"k {recipe.k2}\n"
    lines = []
    for c in recipe.cycles:
        parent = "none" if c.parent is None else str(c.parent)
        lines.append(f"c {c.length} parent={parent} paste={c.paste}")
        for e in sorted(c.mult):
            if c.mult[e] != 1:
                lines.append(f"g {e} {c.mult[e]}")
    return "\n".join(lines) + "\n"


def parse_recipe(text: str) -> CactusRecipe:
    recipe = CactusRecipe()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("map"):
            continue
        parts = line.split()
        try:
            if parts[0] == "k":
                recipe.k2 = int(parts[1])
            elif parts[0] == "c":
                opts = dict(p.split("=", 1) for p in parts[2:])
                parent = opts.get("parent", "none")
                recipe.cycles.append(
                    CycleSpec(
                        int(parts[1]),
                        None if parent == "none" else int(parent),
                        int(opts.get("paste", 0)),
                    )
                )
            elif parts[0] == "g":
                if not recipe.cycles:
                    raise InvalidRecipe(f"line {lineno}: 'g' before any cycle")
                recipe.cycles[-1].mult[int(parts[1])] = int(parts[2])
            else:
                raise InvalidRecipe(f"line {lineno}: unknown record {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise InvalidRecipe(f"line {lineno}: {exc}") from None
    return recipe


# certificates


@dataclass
class CactusCertificate:
    """A recipe plus the host vertex of every recipe vertex."""

    recipe: CactusRecipe
    vertex_map: list[int]

    def host_graph(self, n: int | None = None) -> MultiGraph:
        g = build_from_recipe(self.recipe)
        return g.relabel(self.vertex_map, n if n is not None else len(self.vertex_map))

    def green_pairs(self) -> set[tuple[int, int]]:
        ex = expand(self.recipe)
        return {_pair(self.vertex_map[u], self.vertex_map[v]) for u, v in ex.green}

    def serialize(self) -> str:
        return serialize_recipe(self.recipe) + "map " + " ".join(map(str, self.vertex_map)) + "\n"


def parse_certificate(text: str) -> CactusCertificate:
    recipe = parse_recipe(text)
    vmap = None
    for line in text.splitlines():
        if line.strip().startswith("map"):
            vmap = [int(x) for x in line.split()[1:]]
    if vmap is None:
        raise InvalidRecipe("certificate lacks a 'map' line")
    return CactusCertificate(recipe, vmap)


def certificate_matches(cert: CactusCertificate, g: MultiGraph) -> bool:
    if len(set(cert.vertex_map)) != len(cert.vertex_map) or any(
        not (0 <= v < g.n) for v in cert.vertex_map
    ):
        return False
    if len(cert.vertex_map) != g.n:
        return False
    try:
        return cert.host_graph(g.n) == g
    except (InvalidRecipe, ValueError):
        return False


# recognition by peeling end-cycles


@dataclass(frozen=True)
class _Peel:
    path: tuple[int, ...]


@dataclass(frozen=True)
class _Base:
    kind: str  # "k2" or "cycle"
    order: tuple[int, ...]
    green_parity: int = 0  # edges (order[i], order[i+1]) with i % 2 == parity are green


def _distinct(g: MultiGraph, v: int) -> int:
    return len(g._adj[v])


def _chains(g: MultiGraph):
    """Maximal chains through vertices with two distinct neighbours, between branch vertices."""
    out = []
    seen = set()
    for s in range(g.n):
        if _distinct(g, s) < 3:
            continue
        for x in g.neighbours(s):
            if _distinct(g, x) != 2 or (s, x) in seen:
                continue
            walk = [s, x]
            prev, cur = s, x
            while _distinct(g, cur) == 2:
                a, b = g.neighbours(cur)
                nxt = b if a == prev else a
                walk.append(nxt)
                prev, cur = cur, nxt
            seen.add((walk[-1], walk[-2]))
            out.append(tuple(walk))
    return out


def _cycle_order(g: MultiGraph, active: list[int]) -> tuple[int, ...]:
    start = active[0]
    order = [start]
    prev, cur = -1, start
    while True:
        a, b = g.neighbours(cur)
        nxt = a if a != prev else b
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def _forced(g: MultiGraph, forced: frozenset, p) -> bool:
    return p in forced or g.multiplicity(*p) > 1


def _base_options(g: MultiGraph, forced: frozenset):
    """Base cases: list of _Base records (empty if none applies), or None when the graph
    is not a base case and peeling should continue."""
    active = [v for v in range(g.n) if g._adj[v]]
    if not active:
        return []
    if len(active) == 2 and g.num_pairs() == 1:
        return [_Base("k2", tuple(active))]
    counts = [_distinct(g, v) for v in active]
    if min(counts) < 2:
        return []
    if max(counts) > 2:
        return None
    order = _cycle_order(g, active)
    L = len(order)
    if L != len(active) or L < 6 or L % 4 != 2:
        return []
    classes = []
    for parity in (0, 1):
        ok = True
        for i in range(L):
            p = _pair(order[i], order[(i + 1) % L])
            if i % 2 != parity and _forced(g, forced, p):
                ok = False
                break
        if ok:
            classes.append(_Base("cycle", order, parity))
    return classes


def _candidates(g: MultiGraph, forced: frozenset, avoid):
    out = []
    for walk in _chains(g):
        s, t = walk[0], walk[-1]
        length = len(walk) - 1
        if s == t or length < 5 or length % 4 != 1 or not g.has_edge(s, t):
            continue
        if avoid is not None and avoid in walk[1:-1]:
            continue
        if any(_forced(g, forced, _pair(walk[k - 1], walk[k])) for k in range(1, length + 1, 2)):
            continue
        out.append(walk)
    return out


def _peeled(g: MultiGraph, forced: frozenset, walk):
    h = g.without_vertices(walk[1:-1])
    s, t = walk[0], walk[-1]
    nf = frozenset(p for p in forced | {_pair(s, t)} if h.has_edge(*p))
    return h, nf


class _Recognizer:
    def __init__(self, avoid=None):
        self.avoid = avoid
        self.memo: dict = {}

    def search(self, g: MultiGraph, forced: frozenset):
        key = (g, forced)
        if key in self.memo:
            return self.memo[key]
        self.memo[key] = None
        result = None
        base = _base_options(g, forced)
        if base is not None:
            result = [base[0]] if base else None
        else:
            for walk in _candidates(g, forced, self.avoid):
                h, nf = _peeled(g, forced, walk)
                rest = self.search(h, nf)
                if rest is not None:
                    result = [_Peel(walk)] + rest
                    break
        self.memo[key] = result
        return result


def _admissible_input(g: MultiGraph) -> bool:
    return g.n >= 2 and g.is_connected() and all(g._adj[v] for v in range(g.n))


def _steps(g: MultiGraph, avoid=None):
    if not _admissible_input(g):
        return None
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * g.n + 200))
    return _Recognizer(avoid).search(g, frozenset())


def _certificate_from_steps(g: MultiGraph, steps) -> CactusCertificate:
    base = steps[-1]
    if base.kind == "k2":
        u, v = base.order
        return CactusCertificate(CactusRecipe(k2=g.multiplicity(u, v)), [u, v])
    order = list(base.order)
    if base.green_parity == 1:
        order = order[1:] + order[:1]
    host_cycles = [order]
    specs = [CycleSpec(len(order))]
    green_loc: dict[tuple[int, int], tuple[int, int]] = {}
    for i in range(0, len(order), 2):
        green_loc[_pair(order[i], order[(i + 1) % len(order)])] = (0, i)
    for step in reversed(steps[:-1]):
        walk = step.path
        cid, e = green_loc[_pair(walk[0], walk[-1])]
        pv = host_cycles[cid]
        a, b = pv[e], pv[(e + 1) % len(pv)]
        inner = list(walk[1:-1]) if walk[0] == b else list(reversed(walk[1:-1]))
        vs = [a, b] + inner
        new_id = len(host_cycles)
        host_cycles.append(vs)
        specs.append(CycleSpec(len(vs), cid, e))
        for i in range(2, len(vs), 2):
            green_loc[_pair(vs[i], vs[(i + 1) % len(vs)])] = (new_id, i)
    for cid, (vs, spec) in enumerate(zip(host_cycles, specs)):
        for i in range(0 if cid == 0 else 2, len(vs), 2):
            k = g.multiplicity(vs[i], vs[(i + 1) % len(vs)])
            if k > 1:
                spec.mult[i] = k
    recipe = CactusRecipe(specs)
    ex = expand(recipe)
    vmap = [0] * ex.graph.n
    for rc, hc in zip(ex.cycle_vertices, host_cycles):
        for r, h in zip(rc, hc):
            vmap[r] = h
    return CactusCertificate(recipe, vmap)


def recognize(g: MultiGraph) -> CactusCertificate | None:
    """Certificate that ``g`` is an odd multi-cactus, or ``None``."""
    steps = _steps(g)
    if steps is None:
        return None
    cert = _certificate_from_steps(g, steps)
    if not certificate_matches(cert, g):
        raise AssertionError("recognizer produced a certificate that does not rebuild the graph")
    return cert


def is_odd_multicactus(g: MultiGraph) -> bool:
    return _steps(g) is not None


def red_green_colourings(g: MultiGraph) -> list[frozenset[tuple[int, int]]]:
    """Every green edge set that some certificate of ``g`` induces."""
    if not _admissible_input(g):
        raise NotOMC("graph is not an odd multi-cactus")
    memo: dict = {}

    def all_of(h: MultiGraph, forced: frozenset) -> frozenset:
        key = (h, forced)
        if key in memo:
            return memo[key]
        out: set[frozenset] = set()
        base = _base_options(h, forced)
        if base is not None:
            for b in base:
                if b.kind == "k2":
                    out.add(frozenset({_pair(*b.order)}))
                else:
                    L = len(b.order)
                    out.add(
                        frozenset(
                            _pair(b.order[i], b.order[(i + 1) % L])
                            for i in range(b.green_parity, L, 2)
                        )
                    )
        else:
            for walk in _candidates(h, forced, None):
                rest_h, nf = _peeled(h, forced, walk)
                path_green = {_pair(walk[k - 1], walk[k]) for k in range(2, len(walk), 2)}
                for col in all_of(rest_h, nf):
                    out.add(col | path_green)
        memo[key] = frozenset(out)
        return memo[key]

    cols = all_of(g, frozenset())
    if not cols:
        raise NotOMC("graph is not an odd multi-cactus")
    return sorted(cols, key=lambda s: sorted(s))


# a weighting used in the induction over end-cycles


def cactus_pattern_weighting(g: MultiGraph, v: int) -> Weighting:
    """Weighting of a simple odd multi-cactus in which ``v`` and every vertex on the
    other side have weighted degree 1 and the rest of ``v``'s side has 0 or 2."""
    if g.n == 2 and g.num_pairs() == 1:
        raise IsK2("K2 is excluded")
    if not g.is_simple():
        raise NotSimpleOMC("graph has parallel edges")
    steps = _steps(g, avoid=v)
    if steps is None:
        if _steps(g) is None:
            raise NotSimpleOMC("graph is not an odd multi-cactus")
        raise AssertionError("no peeling order keeps the chosen vertex")
    side = two_colouring(g)
    values: dict[tuple[int, int], int] = {}
    base = steps[-1]
    order = list(base.order)
    k = order.index(v)
    order = order[k:] + order[:k]
    L = len(order)
    for i in range(1, L + 1):
        a, b = order[i - 1], order[i % L]
        values[_pair(a, b)] = 1 if i % 4 in (0, 1) else 0
    for step in reversed(steps[:-1]):
        walk = list(step.path)
        if side[walk[0]] != side[v]:
            walk.reverse()
        for i in range(1, len(walk)):
            values[_pair(walk[i - 1], walk[i])] = 1 if i % 4 in (2, 3) else 0
    w = Weighting.from_values(g, values)
    deg = weighted_degrees(w)
    for x in range(g.n):
        ok = deg[x] == 1 if (x == v or side[x] != side[v]) else deg[x] in (0, 2)
        if not ok:
            raise AssertionError(f"vertex {x} ends with degree {deg[x]}")
    return w


# random recipes


def random_recipe(
    seed: int,
    max_cycles: int = 8,
    lengths=(6, 10, 14),
    max_mult: int = 3,
    cycles: int | None = None,
) -> CactusRecipe:
    rng = SplitMix64(seed)
    count = cycles if cycles is not None else rng.randint(1, max_cycles)
    specs: list[CycleSpec] = []
    for idx in range(count):
        L = rng.choice(list(lengths))
        if idx == 0:
            spec = CycleSpec(L)
        else:
            parent = rng.below(idx)
            spec = CycleSpec(L, parent, 2 * rng.below(specs[parent].length // 2))
        first = 0 if idx == 0 else 2
        for e in range(first, L, 2):
            if max_mult > 1:
                k = rng.randint(1, max_mult) if rng.random() < 0.3 else 1
                if k > 1:
                    spec.mult[e] = k
        specs.append(spec)
    return CactusRecipe(specs)


def random_k2_or_recipe(seed: int, **kw) -> CactusRecipe:
    rng = SplitMix64(seed ^ 0x5DEECE66D)
    if rng.random() < 0.05:
        return CactusRecipe(k2=rng.randint(1, kw.get("max_mult", 3)))
    return random_recipe(seed, **kw)
