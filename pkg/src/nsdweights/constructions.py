"""Recursive constructions of bad trees and of trees with a constrained vertex.

Every spec node builds a graph with a designated vertex.  Each node claims a
class for its output: ``("bad",)``, ``("minus",)`` for a G_v(-) tree, or
``("pair", a, b)`` for a G_v(a,b) tree.  Sub-specs must claim the class the
composition needs, and :func:`construct` checks claims against the tree DP
(or the oracle for small non-tree graphs).

Text form (s-expressions; a list is a parenthesised group of specs)::

    spec  := (k2) | (cycle N)
           | (gvs3 S spec spec list list)      ; left, right, minus, bads
           | (gvs1a S spec spec list list)     ; left, right, minus, bads
           | (gvs1b S list list)               ; minus, bads
           | (bad-from-gvs1 S spec)
           | (glue spec spec)
           | (minus-from-bad spec)
           | (bad-path LENGTH S list)              ; bads
    list  := ( spec* )
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceeded, InvalidSpec
from .generators import cycle
from .graph import MultiGraph
from .oracle import oracle_exists_proper
from .rng import SplitMix64
from .trees import is_bad_tree, vertex_status


class Spec:
    def claim(self) -> tuple:
        raise NotImplementedError


@dataclass(frozen=True)
class K2(Spec):
    def claim(self):
        return ("bad",)


@dataclass(frozen=True)
class Cycle(Spec):
    length: int

    def claim(self):
        if self.length < 6 or self.length % 4 != 2:
            raise InvalidSpec("only cycles of length 2 mod 4 are bad")
        return ("bad",)


def _expect(spec: Spec, want: tuple, role: str) -> None:
    got = spec.claim()
    if got != want:
        raise InvalidSpec(f"{role} must claim {want}, claims {got}")


def _expect_all(specs, want, role):
    for s in specs:
        _expect(s, want, role)


@dataclass(frozen=True)
class GvS3(Spec):
    s: int
    left: Spec
    right: Spec
    minus: tuple = ()
    bads: tuple = ()

    def claim(self):
        if self.s < 0:
            raise InvalidSpec("s must be non-negative")
        _expect(self.left, ("pair", self.s + 1, self.s + 2), "left")
        _expect(self.right, ("pair", self.s + 1, self.s + 2), "right")
        _expect_all(self.minus, ("minus",), "minus entry")
        _expect_all(self.bads, ("bad",), "bad entry")
        if len(self.bads) != self.s:
            raise InvalidSpec(f"needs exactly {self.s} bad graphs")
        return ("pair", self.s, self.s + 3)


@dataclass(frozen=True)
class GvS1a(Spec):
    s: int
    left: Spec
    right: Spec
    minus: tuple = ()
    bads: tuple = ()

    def claim(self):
        if self.s < 1:
            raise InvalidSpec("s must be at least 1")
        _expect(self.left, ("pair", self.s - 1, self.s + 2), "left")
        _expect(self.right, ("pair", self.s, self.s + 1), "right")
        _expect_all(self.minus, ("minus",), "minus entry")
        _expect_all(self.bads, ("bad",), "bad entry")
        if len(self.bads) != self.s - 1:
            raise InvalidSpec(f"needs exactly {self.s - 1} bad graphs")
        return ("pair", self.s, self.s + 1)


@dataclass(frozen=True)
class GvS1b(Spec):
    s: int
    minus: tuple = ()
    bads: tuple = ()

    def claim(self):
        if self.s < 0:
            raise InvalidSpec("s must be non-negative")
        _expect_all(self.minus, ("minus",), "minus entry")
        _expect_all(self.bads, ("bad",), "bad entry")
        if len(self.bads) != self.s:
            raise InvalidSpec(f"needs exactly {self.s} bad graphs")
        return ("pair", self.s, self.s + 1)


@dataclass(frozen=True)
class BadFromGvS1(Spec):
    s: int
    base: Spec

    def claim(self):
        if self.s < 1:
            raise InvalidSpec("s must be at least 1")
        _expect(self.base, ("pair", self.s, self.s + 1), "base")
        return ("bad",)


@dataclass(frozen=True)
class BadGlue(Spec):
    left: Spec
    right: Spec

    def claim(self):
        _expect(self.left, ("bad",), "left")
        _expect(self.right, ("bad",), "right")
        return ("bad",)


@dataclass(frozen=True)
class GvMinusFromBad(Spec):
    bad: Spec

    def claim(self):
        _expect(self.bad, ("bad",), "bad")
        return ("minus",)


@dataclass(frozen=True)
class BadPath(Spec):
    length: int
    s: int
    bads: tuple = ()
    attach: tuple | None = None  # vertex of each bad graph that receives the joining edge

    def claim(self):
        if self.length < 1 or self.length % 4 != 1:
            raise InvalidSpec("path length must be 1 mod 4")
        if self.s < 0:
            raise InvalidSpec("s must be non-negative")
        want = (self.length - 1) * self.s + 2 * (self.s + 1)
        if len(self.bads) != want:
            raise InvalidSpec(f"needs exactly {want} bad graphs")
        if self.attach is not None and len(self.attach) != want:
            raise InvalidSpec("one attachment vertex per bad graph")
        _expect_all(self.bads, ("bad",), "bad entry")
        return ("bad",)


@dataclass
class Built:
    graph: MultiGraph
    vertex: int
    claim: tuple = field(default=())


def suitable_leaves(g: MultiGraph) -> list[int]:
    """Leaves whose neighbour has degree 2."""
    return [
        v for v in range(g.n) if g.degree(v) == 1 and g.degree(g.neighbours(v)[0]) == 2
    ]


def _pick_leaf(b: Built) -> int:
    leaves = suitable_leaves(b.graph)
    if not leaves:
        raise InvalidSpec("bad graph has no leaf next to a degree-2 vertex")
    return b.vertex if b.vertex in leaves else leaves[0]


def _hub(s_kids: list[tuple[Built, int]]) -> MultiGraph:
    """New vertex 0 joined to the given vertex of each built part."""
    n = 1
    edges = []
    for part, at in s_kids:
        edges += [(u + n, v + n, k) for (u, v), k in part.graph.items()]
        edges.append((0, at + n))
        n += part.graph.n
    return MultiGraph(n, edges)


def _build(spec: Spec, verify: bool, oracle_budget: int) -> Built:
    claim = spec.claim()
    if isinstance(spec, K2):
        out = Built(MultiGraph(2, [(0, 1)]), 0, claim)
    elif isinstance(spec, Cycle):
        out = Built(cycle(spec.length), 0, claim)
    elif isinstance(spec, (GvS3, GvS1a)):
        kids = [_build(x, verify, oracle_budget) for x in (spec.left, spec.right, *spec.minus)]
        bads = [_build(x, verify, oracle_budget) for x in spec.bads]
        parts = [(b, b.vertex) for b in kids] + [(b, 0) for b in bads]
        out = Built(_hub(parts), 0, claim)
    elif isinstance(spec, GvS1b):
        kids = [_build(x, verify, oracle_budget) for x in spec.minus]
        bads = [_build(x, verify, oracle_budget) for x in spec.bads]
        parts = [(b, b.vertex) for b in kids] + [(b, 0) for b in bads]
        out = Built(_hub(parts), 0, claim)
    elif isinstance(spec, BadFromGvS1):
        base = _build(spec.base, verify, oracle_budget)
        k2 = Built(MultiGraph(2, [(0, 1)]), 0)
        g = _hub([(base, base.vertex)] + [(k2, 0)] * spec.s)
        # first K2 sits right after the base; its far end is a leaf next to a degree-2 vertex
        out = Built(g, 1 + base.graph.n + 1, claim)
    elif isinstance(spec, BadGlue):
        left = _build(spec.left, verify, oracle_budget)
        right = _build(spec.right, verify, oracle_budget)
        l1 = _pick_leaf(left)
        l2 = left.graph.neighbours(l1)[0]
        r1 = _pick_leaf(right)
        r2 = right.graph.neighbours(r1)[0]
        mapping = {}
        nxt = left.graph.n
        for v in range(right.graph.n):
            if v == r1:
                mapping[v] = l1
            elif v == r2:
                mapping[v] = l2
            else:
                mapping[v] = nxt
                nxt += 1
        edges = [(u, v, k) for (u, v), k in left.graph.items()]
        edges += [
            (mapping[u], mapping[v], k) for (u, v), k in right.graph.items() if {u, v} != {r1, r2}
        ]
        g = MultiGraph(nxt, edges)
        leaves = suitable_leaves(g)
        out = Built(g, leaves[0] if leaves else l1, claim)
    elif isinstance(spec, GvMinusFromBad):
        bad = _build(spec.bad, verify, oracle_budget)
        x1 = _pick_leaf(bad)
        x2 = bad.graph.neighbours(x1)[0]
        y = next(z for z in bad.graph.neighbours(x2) if z != x1)
        sub, old = bad.graph.induced([v for v in range(bad.graph.n) if v not in (x1, x2)])
        out = Built(sub, old.index(y), claim)
    elif isinstance(spec, BadPath):
        bads = [_build(x, verify, oracle_budget) for x in spec.bads]
        attach = spec.attach or (0,) * len(bads)
        L = spec.length
        n = L + 1
        edges = [(i, i + 1) for i in range(L)]
        owners = []
        for i in range(L + 1):
            owners += [i] * (spec.s + 1 if i in (0, L) else spec.s)
        for owner, part, at in zip(owners, bads, attach):
            if not 0 <= at < part.graph.n:
                raise InvalidSpec(f"attachment vertex {at} outside the bad graph")
            edges += [(u + n, v + n, k) for (u, v), k in part.graph.items()]
            edges.append((owner, at + n))
            n += part.graph.n
        out = Built(MultiGraph(n, edges), 0, claim)
    else:
        raise InvalidSpec(f"unknown spec node {spec!r}")
    if verify:
        _verify(out, oracle_budget)
    return out


def actual_claim(b: Built, oracle_budget: int = 20) -> tuple | None:
    """Class of a built graph as decided by the DP (trees) or the oracle; None if unknown."""
    g = b.graph
    if g.is_tree():
        if b.claim == ("bad",):
            return ("bad",) if is_bad_tree(g) else ("good",)
        st = vertex_status(g, b.vertex)
        if st.label == "gv_minus":
            return ("minus",)
        if st.label == "gv_pair":
            return ("pair", *st.pair)
        return (st.label,)
    if b.claim == ("bad",):
        try:
            return ("bad",) if oracle_exists_proper(g, edge_budget=oracle_budget) is None else ("good",)
        except BudgetExceeded:
            return None
    return None


def _verify(b: Built, oracle_budget: int) -> None:
    got = actual_claim(b, oracle_budget)
    if got is not None and got != b.claim:
        raise InvalidSpec(f"construction claims {b.claim} but the graph is {got}")


def construct(spec: Spec, verify: bool = True, oracle_budget: int = 20) -> Built:
    return _build(spec, verify, oracle_budget)


# text form


def _tokens(text: str) -> list[str]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def parse_spec(text: str) -> Spec:
    toks = _tokens(text)
    pos = 0

    def expect(tok):
        nonlocal pos
        if pos >= len(toks) or toks[pos] != tok:
            got = toks[pos] if pos < len(toks) else "end of input"
            raise InvalidSpec(f"expected {tok!r}, got {got!r}")
        pos += 1

    def integer():
        nonlocal pos
        if pos >= len(toks):
            raise InvalidSpec("expected an integer, got end of input")
        try:
            val = int(toks[pos])
        except ValueError:
            raise InvalidSpec(f"expected an integer, got {toks[pos]!r}") from None
        pos += 1
        return val

    def seq():
        expect("(")
        items = []
        while pos < len(toks) and toks[pos] != ")":
            items.append(node())
        expect(")")
        return tuple(items)

    def node():
        nonlocal pos
        expect("(")
        if pos >= len(toks):
            raise InvalidSpec("unexpected end of input")
        head = toks[pos]
        pos += 1
        if head == "k2":
            out = K2()
        elif head == "cycle":
            out = Cycle(integer())
        elif head in ("gvs3", "gvs1a"):
            s = integer()
            left, right = node(), node()
            minus, bads = seq(), seq()
            out = (GvS3 if head == "gvs3" else GvS1a)(s, left, right, minus, bads)
        elif head == "gvs1b":
            s = integer()
            minus, bads = seq(), seq()
            out = GvS1b(s, minus, bads)
        elif head == "bad-from-gvs1":
            s = integer()
            out = BadFromGvS1(s, node())
        elif head == "glue":
            out = BadGlue(node(), node())
        elif head == "minus-from-bad":
            out = GvMinusFromBad(node())
        elif head == "bad-path":
            length, s = integer(), integer()
            out = BadPath(length, s, seq())
        else:
            raise InvalidSpec(f"unknown constructor {head!r}")
        expect(")")
        return out

    spec = node()
    if pos != len(toks):
        raise InvalidSpec("trailing input after spec")
    return spec


def format_spec(spec: Spec) -> str:
    def lst(items):
        return "(" + " ".join(format_spec(x) for x in items) + ")"

    if isinstance(spec, K2):
        return "(k2)"
    if isinstance(spec, Cycle):
        return f"(cycle {spec.length})"
    if isinstance(spec, GvS3):
        return f"(gvs3 {spec.s} {format_spec(spec.left)} {format_spec(spec.right)} {lst(spec.minus)} {lst(spec.bads)})"
    if isinstance(spec, GvS1a):
        return f"(gvs1a {spec.s} {format_spec(spec.left)} {format_spec(spec.right)} {lst(spec.minus)} {lst(spec.bads)})"
    if isinstance(spec, GvS1b):
        return f"(gvs1b {spec.s} {lst(spec.minus)} {lst(spec.bads)})"
    if isinstance(spec, BadFromGvS1):
        return f"(bad-from-gvs1 {spec.s} {format_spec(spec.base)})"
    if isinstance(spec, BadGlue):
        return f"(glue {format_spec(spec.left)} {format_spec(spec.right)})"
    if isinstance(spec, GvMinusFromBad):
        return f"(minus-from-bad {format_spec(spec.bad)})"
    if isinstance(spec, BadPath):
        return f"(bad-path {spec.length} {spec.s} {lst(spec.bads)})"
    raise InvalidSpec(f"unknown spec node {spec!r}")


def spec_size(spec: Spec) -> int:
    """Vertex count of the constructed graph, without building it."""
    if isinstance(spec, K2):
        return 2
    if isinstance(spec, Cycle):
        return spec.length
    if isinstance(spec, (GvS3, GvS1a)):
        return 1 + sum(spec_size(x) for x in (spec.left, spec.right, *spec.minus, *spec.bads))
    if isinstance(spec, GvS1b):
        return 1 + sum(spec_size(x) for x in (*spec.minus, *spec.bads))
    if isinstance(spec, BadFromGvS1):
        return 1 + spec_size(spec.base) + 2 * spec.s
    if isinstance(spec, BadGlue):
        return spec_size(spec.left) + spec_size(spec.right) - 2
    if isinstance(spec, GvMinusFromBad):
        return spec_size(spec.bad) - 2
    if isinstance(spec, BadPath):
        return spec.length + 1 + sum(spec_size(x) for x in spec.bads)
    raise InvalidSpec(f"unknown spec node {spec!r}")


# random specs for property sweeps


class SpecSampler:
    """Random specs of a requested class, kept under a vertex budget."""

    def __init__(self, seed: int, max_s: int = 2, max_minus: int = 1):
        self.rng = SplitMix64(seed)
        self.max_s = max_s
        self.max_minus = max_minus

    def bad(self, budget: int) -> Spec:
        rng = self.rng
        roll = rng.below(3)
        if budget >= 6 and roll == 1:
            s = rng.randint(1, min(self.max_s, (budget - 2) // 2))
            base = self.pair_s1(s, budget - 1 - 2 * s)
            if base is not None:
                return BadFromGvS1(s, base)
        if budget >= 10 and roll == 2:
            left = self.bad(budget // 2 + 1)
            right = self.bad(budget - spec_size(left) + 2)
            if all(suitable_leaves(construct(x, verify=False).graph) for x in (left, right)):
                glued = BadGlue(left, right)
                if spec_size(glued) <= budget:
                    return glued
        return K2()

    def minus(self, budget: int) -> Spec | None:
        for _ in range(4):
            b = self.bad(budget + 2)
            if suitable_leaves(construct(b, verify=False).graph):
                return GvMinusFromBad(b)
        return None

    def _extras(self, budget: int, bads_needed: int):
        if bads_needed * 2 > budget:
            return None
        bads = []
        for _ in range(bads_needed):
            bads.append(self.bad(max(2, (budget // max(1, bads_needed + 1)))))
        used = sum(spec_size(b) for b in bads)
        if used > budget:
            bads = [K2()] * bads_needed
            used = 2 * bads_needed
        minus = []
        for _ in range(self.rng.below(self.max_minus + 1)):
            m = self.minus(budget - used)
            if m is not None and used + spec_size(m) <= budget:
                minus.append(m)
                used += spec_size(m)
        return tuple(minus), tuple(bads), used

    def pair_s1(self, s: int, budget: int) -> Spec | None:
        """A G_v(s, s+1) spec with at most ``budget`` vertices."""
        if budget < 1:
            return None
        if s >= 1 and budget >= 12 and self.rng.below(2):
            left = self.pair_s3(s - 1, budget // 2)
            if left is not None:
                right = self.pair_s1(s, budget - 1 - spec_size(left))
                if right is not None:
                    room = budget - 1 - spec_size(left) - spec_size(right)
                    extra = self._extras(room, s - 1)
                    if extra is not None:
                        minus, bads, _ = extra
                        return GvS1a(s, left, right, minus, bads)
        extra = self._extras(budget - 1, s)
        if extra is None:
            return None
        minus, bads, _ = extra
        return GvS1b(s, minus, bads)

    def pair_s3(self, s: int, budget: int) -> Spec | None:
        left = self.pair_s1(s + 1, (budget - 1) // 2)
        if left is None:
            return None
        right = self.pair_s1(s + 1, budget - 1 - spec_size(left))
        if right is None:
            return None
        extra = self._extras(budget - 1 - spec_size(left) - spec_size(right), s)
        if extra is None:
            return None
        minus, bads, _ = extra
        return GvS3(s, left, right, minus, bads)


# decompositions of bad trees


def _branch(t: MultiGraph, hub: int, start: int) -> list[int]:
    cut = t.without_edge(hub, start)
    return next(c for c in cut.components() if start in c)


def bad_tree_decompositions(t: MultiGraph) -> list[tuple]:
    """All ways ``t`` arises from a bad-tree construction step.

    ``("a", s, v_prime, v)``: ``v_prime`` has ``s`` pendant K2's and one more
    neighbour ``v`` whose side is a G_v(s, s+1) tree.
    ``("b", leaf, hub)``: a leaf next to a degree-3 vertex; the two trees obtained
    by dropping either remaining branch are both bad.
    """
    found = []
    for vp in range(t.n):
        nbrs = t.neighbours(vp)
        k2s = [
            a for a in nbrs
            if t.degree(a) == 2 and any(t.degree(b) == 1 for b in t.neighbours(a) if b != vp)
        ]
        for v in nbrs:
            others = [a for a in nbrs if a != v]
            if not others or any(a not in k2s for a in others):
                continue
            s = len(others)
            side = _branch(t, vp, v)
            sub, old = t.induced(side)
            st = vertex_status(sub, old.index(v))
            if st.label == "gv_pair" and st.pair == (s, s + 1):
                found.append(("a", s, vp, v))
    for leaf in range(t.n):
        if t.degree(leaf) != 1:
            continue
        hub = t.neighbours(leaf)[0]
        if t.degree(hub) != 3:
            continue
        x1, x2 = [x for x in t.neighbours(hub) if x != leaf]
        g1, _ = t.induced([v for v in range(t.n) if v not in _branch(t, hub, x2)])
        g2, _ = t.induced([v for v in range(t.n) if v not in _branch(t, hub, x1)])
        if is_bad_tree(g1) and is_bad_tree(g2):
            found.append(("b", leaf, hub))
    return found
