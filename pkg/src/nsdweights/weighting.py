"""Edge weightings with two weights, weighted degrees and conflicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import GraphError, ParseError
from .graph import MultiGraph


@dataclass(frozen=True)
class WeightPair:
    a: int = 0
    b: int = 1

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("the two weights must differ")

    def value(self, choice: int) -> int:
        return self.b if choice else self.a

    def distinct_parity(self) -> bool:
        return (self.a - self.b) % 2 == 1

    def __iter__(self):
        return iter((self.a, self.b))


ZERO_ONE = WeightPair(0, 1)


def as_pair(pair) -> WeightPair:
    if isinstance(pair, WeightPair):
        return pair
    return WeightPair(*pair)


def as_increments(g: MultiGraph, increments) -> tuple[int, ...]:
    if increments is None:
        return (0,) * g.n
    if isinstance(increments, dict):
        out = [0] * g.n
        for v, k in increments.items():
            out[v] += k
    else:
        out = list(increments)
        if len(out) != g.n:
            raise ValueError("increments must cover every vertex")
    if any(k < 0 for k in out):
        raise ValueError("increments must be non-negative")
    return tuple(out)


@dataclass(frozen=True)
class Weighting:
    """A choice of low (0) or high (1) weight for every edge copy of ``graph``.

    ``choice[i]`` belongs to ``graph.copies()[i]``.
    """

    graph: MultiGraph
    choice: tuple[int, ...]
    pair: WeightPair = ZERO_ONE
    increments: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if len(self.choice) != self.graph.num_copies():
            raise ValueError(
                f"weighting has {len(self.choice)} entries for {self.graph.num_copies()} edge copies"
            )
        if any(c not in (0, 1) for c in self.choice):
            raise ValueError("choices must be 0 (low) or 1 (high)")
        if not self.increments:
            object.__setattr__(self, "increments", (0,) * self.graph.n)
        object.__setattr__(self, "pair", as_pair(self.pair))

    @classmethod
    def from_values(cls, g: MultiGraph, values: dict, pair=ZERO_ONE, increments=None) -> Weighting:
        """Build from ``{(u, v, copy): weight}`` (or ``{(u, v): weight}`` for simple pairs)."""
        pair = as_pair(pair)
        choice = []
        for u, v, i in g.copies():
            w = values.get((u, v, i), values.get((v, u, i)))
            if w is None and g.multiplicity(u, v) == 1:
                w = values.get((u, v), values.get((v, u)))
            if w not in (pair.a, pair.b):
                raise ValueError(f"weight {w!r} on copy {(u, v, i)} is not in {tuple(pair)}")
            choice.append(int(w == pair.b))
        return cls(g, tuple(choice), pair, as_increments(g, increments))

    @classmethod
    def from_subset(cls, g: MultiGraph, subset, pair=ZERO_ONE, increments=None) -> Weighting:
        """High weight exactly on the copies listed in ``subset``."""
        chosen = set(subset)
        choice = tuple(int(c in chosen) for c in g.copies())
        return cls(g, choice, as_pair(pair), as_increments(g, increments))

    def weight(self, u: int, v: int, copy: int = 0) -> int:
        if u > v:
            u, v = v, u
        idx = self.graph.copies().index((u, v, copy))
        return self.pair.value(self.choice[idx])

    def values(self) -> dict[tuple[int, int, int], int]:
        return {c: self.pair.value(x) for c, x in zip(self.graph.copies(), self.choice)}

    def scaled(self, pair) -> Weighting:
        return Weighting(self.graph, self.choice, as_pair(pair), self.increments)

    def with_increments(self, increments) -> Weighting:
        return Weighting(self.graph, self.choice, self.pair, as_increments(self.graph, increments))

    def flipped(self, indices) -> Weighting:
        choice = list(self.choice)
        for i in indices:
            choice[i] ^= 1
        return Weighting(self.graph, tuple(choice), self.pair, self.increments)


def weighted_degrees(w: Weighting) -> list[int]:
    deg = list(w.increments)
    for (u, v, _), c in zip(w.graph.copies(), w.choice):
        x = w.pair.value(c)
        deg[u] += x
        deg[v] += x
    return deg


@dataclass(frozen=True)
class ConflictReport:
    conflicts: tuple[tuple[int, int], ...]
    parity_conflicts: tuple[tuple[int, int], ...]

    @property
    def proper(self) -> bool:
        return not self.conflicts


def conflicts(w: Weighting) -> ConflictReport:
    deg = weighted_degrees(w)
    eq = tuple(p for p in w.graph.pairs() if deg[p[0]] == deg[p[1]])
    par = tuple(p for p in w.graph.pairs() if (deg[p[0]] - deg[p[1]]) % 2 == 0)
    return ConflictReport(eq, par)


def is_proper(w: Weighting) -> bool:
    deg = weighted_degrees(w)
    return all(deg[u] != deg[v] for u, v in w.graph.pairs())


def cycle_swap(w: Weighting, walk: Sequence[tuple[int, int, int]]) -> Weighting:
    """Flip low/high on a closed walk given as oriented copies ``(u, v, copy)``.

    Consecutive copies must share an endpoint (``v`` of one is ``u`` of the next),
    the last must return to the start, and no copy may repeat.
    """
    if not walk:
        raise GraphError("empty walk")
    index = {c: i for i, c in enumerate(w.graph.copies())}
    used = []
    for k, (u, v, c) in enumerate(walk):
        key = (u, v, c) if u < v else (v, u, c)
        if key not in index:
            raise GraphError(f"copy {(u, v, c)} is not in the graph")
        nxt = walk[(k + 1) % len(walk)]
        if v != nxt[0]:
            raise GraphError("walk is not closed" if k == len(walk) - 1 else f"walk breaks after {(u, v, c)}")
        used.append(index[key])
    if len(set(used)) != len(used):
        raise GraphError("walk repeats an edge copy")
    return w.flipped(used)


def vertex_walk_to_copies(g: MultiGraph, vertices: Sequence[int]) -> list[tuple[int, int, int]]:
    """Turn a closed vertex sequence ``v0 v1 .. v0`` into copies, taking copy 0 of each pair
    and further copies when a pair repeats."""
    used: dict[tuple[int, int], int] = {}
    out = []
    for u, v in zip(vertices, vertices[1:]):
        key = (u, v) if u < v else (v, u)
        c = used.get(key, 0)
        used[key] = c + 1
        out.append((u, v, c))
    return out


# serialization


def serialize_weighting(w: Weighting) -> str:
    lines = [f"pair {w.pair.a} {w.pair.b}"]
    for (u, v, c), x in zip(w.graph.copies(), w.choice):
        lines.append(f"{u} {v} {c} {w.pair.value(x)}")
    return "\n".join(lines) + "\n"


def parse_weighting(text: str, g: MultiGraph, increments=None) -> Weighting:
    pair = None
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if pair is None:
            if parts[0] != "pair" or len(parts) != 3:
                raise ParseError("expected header 'pair <a> <b>'", lineno)
            try:
                pair = WeightPair(int(parts[1]), int(parts[2]))
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            continue
        if len(parts) != 4:
            raise ParseError(f"expected 'u v copy w', got {line!r}", lineno)
        try:
            u, v, c, x = (int(p) for p in parts)
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        key = (u, v, c) if u < v else (v, u, c)
        if key in values:
            raise ParseError(f"copy {key} weighted twice", lineno)
        values[key] = x
    if pair is None:
        raise ParseError("missing 'pair' header")
    missing = [c for c in g.copies() if c not in values]
    extra = [c for c in values if c not in set(g.copies())]
    if missing or extra:
        raise GraphError(f"weighting does not match the graph: missing {missing[:5]}, unknown {extra[:5]}")
    return Weighting.from_values(g, values, pair, increments)
