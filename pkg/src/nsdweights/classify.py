"""Decide the {a,b}-property of a graph, choosing the cheapest sound procedure."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cactus import recognize
from .errors import BothSidesOdd, GraphError, PreconditionViolated
from .graph import MultiGraph, bridges, two_colouring
from .oracle import DEFAULT_BUDGET, oracle_exists_proper
from .parity import f_factor_mod2, local_max_weighting, parity_proper_weighting
from .rng import SplitMix64
from .trees import classify_tree
from .weighting import Weighting, WeightPair, as_pair, conflicts, serialize_weighting, weighted_degrees


@dataclass
class Verdict:
    pair: WeightPair
    has_property: bool | None  # None: undecided within the oracle budget
    witness: Weighting | None = None
    certificate: str | None = None
    method: str = ""
    notes: list[str] = field(default_factory=list)

    def record(self) -> dict:
        return {
            "pair": [self.pair.a, self.pair.b],
            "has_property": self.has_property,
            "method": self.method,
            "witness": serialize_weighting(self.witness) if self.witness is not None else None,
            "certificate": self.certificate,
            "notes": list(self.notes),
        }


def is_zero_type(pair: WeightPair) -> bool:
    """Pairs {0, a}: equivalent to {0, 1} by scaling."""
    return 0 in (pair.a, pair.b)


def is_positive_distinct_parity(pair: WeightPair) -> bool:
    return pair.a > 0 and pair.b > 0 and pair.distinct_parity()


def transfer(w: Weighting, pair: WeightPair) -> Weighting:
    """Carry a {0,1}-weighting over to the pair {0, x}: weight 1 becomes x."""
    pair = as_pair(pair)
    if tuple(w.pair) != (0, 1):
        raise ValueError("only {0,1}-weightings can be transferred")
    if pair.a == 0:
        return w.scaled(pair)
    return Weighting(w.graph, tuple(1 - c for c in w.choice), pair, w.increments)


def local_search(g: MultiGraph, pair: WeightPair, seed: int = 0, max_steps: int = 4000) -> Weighting | None:
    """Min-conflicts random walk over single flips, started from a parity weighting."""
    if g.num_copies() == 0:
        return Weighting(g, ())
    rng = SplitMix64(seed)
    copies = g.copies()
    start = [0] * len(copies)
    if pair.distinct_parity() and g.is_connected() and g.is_bipartite():
        side = two_colouring(g)
        target = [side[v] == 0 for v in range(g.n)]
        if sum(target) % 2:
            target[0] = not target[0]
        f = [(int(t) - pair.a * g.degree(v)) % 2 for v, t in enumerate(target)]
        try:
            chosen = f_factor_mod2(g, f)
            start = [int(c in chosen) for c in copies]
        except GraphError:
            pass
    choice = start
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v, _) in enumerate(copies):
        incident[u].append(i)
        incident[v].append(i)
    pairs = g.pairs()
    for _ in range(max_steps):
        w = Weighting(g, tuple(choice), pair)
        deg = weighted_degrees(w)
        bad = [p for p in pairs if deg[p[0]] == deg[p[1]]]
        if not bad:
            return w
        u, v = rng.choice(bad)
        x = rng.choice([u, v])
        best = None
        best_score = None
        for i in incident[x]:
            choice[i] ^= 1
            d2 = weighted_degrees(Weighting(g, tuple(choice), pair))
            score = sum(d2[a] == d2[b] for a, b in pairs)
            choice[i] ^= 1
            if best_score is None or score < best_score or (score == best_score and rng.below(2)):
                best, best_score = i, score
        if rng.random() < 0.1:
            best = rng.choice(range(len(copies)))
        choice[best] ^= 1
    return None


def find_witness(g: MultiGraph, pair: WeightPair, budget: int, seed: int = 0) -> tuple[Weighting | None, str]:
    """Proper weighting by parity factors, the local-maximum procedure, local search, then
    the oracle.  Returns (weighting or None, method)."""
    if g.is_connected() and pair.distinct_parity():
        try:
            return parity_proper_weighting(g, pair=pair), "parity"
        except (BothSidesOdd, GraphError):
            pass
    if is_zero_type(pair) and g.is_connected() and g.is_simple() and g.is_bipartite():
        for w0 in sorted(range(g.n), key=lambda v: -g.degree(v)):
            if g.degree(w0) < 4:
                break
            try:
                w = local_max_weighting(g, w0)
            except PreconditionViolated:
                continue
            return transfer(w, pair), "local-max"
    w = local_search(g, pair, seed)
    if w is not None:
        return w, "repair"
    if g.num_copies() <= budget:
        return oracle_exists_proper(g, pair, edge_budget=budget), "oracle"
    return None, "none"


def _bad_tree_summary(g: MultiGraph) -> str:
    return f"tree-dp: no achievable root degree for root 0 ({g.n} vertices)"


def classify(g: MultiGraph, pair=(0, 1), budget: int = DEFAULT_BUDGET, seed: int = 0) -> Verdict:
    pair = as_pair(pair)
    if g.num_pairs() == 0:
        return Verdict(pair, True, Weighting(g, ()), method="trivial")
    if not g.is_connected():
        return _classify_components(g, pair, budget, seed)
    if g.is_tree():
        tc = classify_tree(g, pair)
        if tc.good:
            return Verdict(pair, True, tc.witness, method="tree-dp")
        return Verdict(pair, False, certificate=_bad_tree_summary(g), method="tree-dp")
    bipartite = g.is_bipartite()
    decided_by_cactus = bipartite and (
        is_positive_distinct_parity(pair) or (is_zero_type(pair) and not bridges(g))
    )
    if decided_by_cactus:
        cert = recognize(g)
        if cert is not None:
            return Verdict(pair, False, certificate=cert.serialize(), method="recognizer")
        w, how = find_witness(g, pair, budget, seed)
        v = Verdict(pair, True, w, method="recognizer" if w is None else how)
        if w is None:
            v.notes.append("property guaranteed by the odd multi-cactus characterization; no witness found")
        return v
    w, how = find_witness(g, pair, budget, seed)
    if w is not None:
        return Verdict(pair, True, w, method=how)
    if g.num_copies() <= budget:
        return Verdict(pair, False, method="oracle")
    return Verdict(pair, None, method="none", notes=[f"{g.num_copies()} copies exceed budget {budget}"])


def _classify_components(g: MultiGraph, pair: WeightPair, budget: int, seed: int) -> Verdict:
    choice: dict[tuple[int, int, int], int] = {}
    methods = []
    certs = []
    undecided = False
    for comp in g.components():
        if len(comp) == 1:
            continue
        sub, old = g.induced(comp)
        v = classify(sub, pair, budget, seed)
        methods.append(v.method)
        if v.has_property is False:
            cert = v.certificate
            return Verdict(pair, False, certificate=cert, method=v.method,
                           notes=[f"component {old} lacks the property"])
        if v.has_property is None:
            undecided = True
            continue
        if v.witness is None:
            undecided = True
            continue
        for (a, b, k), c in zip(sub.copies(), v.witness.choice):
            choice[(old[a], old[b], k)] = c
        if v.certificate:
            certs.append(v.certificate)
    if undecided:
        return Verdict(pair, None, method="+".join(methods), notes=["a component is undecided"])
    w = Weighting(g, tuple(choice[c] for c in g.copies()), pair)
    return Verdict(pair, True, w, method="+".join(sorted(set(methods))))


def verify_verdict(g: MultiGraph, v: Verdict) -> bool:
    if v.has_property and v.witness is not None:
        return conflicts(v.witness).proper
    return True
