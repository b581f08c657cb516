"""Cross-validation of the polynomial procedures against the exhaustive oracle.

Instances are produced from a seed alone, so a run can be split over worker
processes and the aggregated report does not depend on scheduling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cactus import build_from_recipe, certificate_matches, expand, parse_certificate, random_recipe, recognize
from .generators import cycle, random_bridgeless_bipartite
from .graph import MultiGraph, bridges, parse_edge_list, serialize_edge_list
from .oracle import oracle_exists_proper
from .rng import SplitMix64
from .trees import classify_tree, enumerate_trees

FAMILIES = ("trees", "bridgeless", "omc")


@dataclass
class Report:
    family: str
    checked: int = 0
    disagreements: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def record(self) -> dict:
        return {
            "family": self.family,
            "checked": self.checked,
            "disagreements": len(self.disagreements),
            "details": self.disagreements,
        }


# instance corpora


def _bump_multiplicities(g: MultiGraph, rng: SplitMix64, max_copies: int) -> MultiGraph:
    pairs = g.pairs()
    for _ in range(rng.randint(1, 3)):
        if g.num_copies() >= max_copies:
            break
        u, v = rng.choice(pairs)
        g = g.with_multiplicity(u, v, g.multiplicity(u, v) + 1)
    return g


def _small_recipe(rng: SplitMix64, max_copies: int):
    for _ in range(50):
        recipe = random_recipe(rng.next_u64(), max_cycles=3, lengths=(6, 10, 14), max_mult=3)
        ex = expand(recipe)
        if ex.graph.num_copies() <= max_copies:
            return recipe, ex
    return None


def bridgeless_instance(seed: int, max_copies: int = 20) -> tuple[str, MultiGraph]:
    """One connected bridgeless bipartite graph with at most ``max_copies`` copies.

    Mixes random ear decompositions (simple and with raised multiplicities),
    odd multi-cacti, and odd multi-cacti with one red edge doubled or one ear added.
    """
    rng = SplitMix64(seed)
    kind = rng.below(10)
    if kind >= 6:
        made = _small_recipe(rng, max_copies - (1 if kind == 9 else 0))
        if made is not None:
            recipe, ex = made
            g = ex.graph
            if kind < 9:
                return "omc", g
            red = [p for p in g.pairs() if p not in ex.green]
            u, v = rng.choice(red)
            return "omc+red", g.with_multiplicity(u, v, 2)
    while True:
        n = rng.randint(4, min(16, max_copies))
        hi = min(max_copies, (n // 2) * (n - n // 2))
        m = rng.randint(n, max(n, hi))
        if m == n and n % 2:
            continue
        try:
            g = random_bridgeless_bipartite(n, m, rng.next_u64())
        except ValueError:
            continue
        if kind >= 4 and g.num_copies() < max_copies:
            return "ears+mult", _bump_multiplicities(g, rng, max_copies)
        return "ears", g


def bridgeless_corpus(count: int = 500, max_copies: int = 20, seed: int = 0, cycles=range(4, 23, 2)):
    """``count`` seeded instances followed by the listed cycles."""
    out = [bridgeless_instance(seed * 1_000_003 + i, max_copies) for i in range(count)]
    out += [(f"C{n}", cycle(n)) for n in cycles]
    return out


# single checks (top level so worker processes can run them)


def check_tree(text: str) -> dict | None:
    t = parse_edge_list(text)
    bad_dp = classify_tree(t).bad
    bad_oracle = oracle_exists_proper(t, edge_budget=max(22, t.num_copies())) is None
    if bad_dp != bad_oracle:
        return {"graph": text, "dp_bad": bad_dp, "oracle_bad": bad_oracle}
    return None


def check_bridgeless(args) -> dict | None:
    label, text, pair = args
    g = parse_edge_list(text)
    if not g.is_connected() or bridges(g) or not g.is_bipartite():
        return {"graph": text, "label": label, "error": "instance is not connected bridgeless bipartite"}
    omc = recognize(g) is not None
    bad = oracle_exists_proper(g, pair, edge_budget=max(22, g.num_copies())) is None
    if omc != bad:
        return {"graph": text, "label": label, "recognized": omc, "oracle_bad": bad}
    return None


def check_recipe(seed: int) -> dict | None:
    recipe = random_recipe(seed)
    g = build_from_recipe(recipe)
    cert = recognize(g)
    if cert is None:
        return {"seed": seed, "error": "recognizer rejected an odd multi-cactus"}
    again = parse_certificate(cert.serialize())
    if not certificate_matches(again, g):
        return {"seed": seed, "error": "certificate does not rebuild the graph"}
    return None


def _run(fn, items, workers: int) -> list:
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=16))


def crosscheck_trees(max_n: int = 10, workers: int = 1) -> Report:
    items = [serialize_edge_list(t) for n in range(1, max_n + 1) for t in enumerate_trees(n)]
    rep = Report("trees", len(items))
    rep.disagreements = [r for r in _run(check_tree, items, workers) if r is not None]
    return rep


def crosscheck_bridgeless(
    count: int = 200, max_copies: int = 18, seed: int = 0, pair=(0, 1), workers: int = 1, cycles=()
) -> Report:
    corpus = bridgeless_corpus(count, max_copies, seed, cycles)
    items = [(label, serialize_edge_list(g), tuple(pair)) for label, g in corpus]
    rep = Report("bridgeless", len(items))
    rep.disagreements = [r for r in _run(check_bridgeless, items, workers) if r is not None]
    return rep


def crosscheck_omc(count: int = 100, seed: int = 0, workers: int = 1) -> Report:
    items = [seed * 1_000_003 + i for i in range(count)]
    rep = Report("omc", len(items))
    rep.disagreements = [r for r in _run(check_recipe, items, workers) if r is not None]
    return rep


def run_crosscheck(family: str, *, max_n: int = 10, count: int = 200, max_copies: int = 18,
                   seed: int = 0, pair=(0, 1), workers: int = 1) -> Report:
    if family == "trees":
        return crosscheck_trees(max_n, workers)
    if family == "bridgeless":
        return crosscheck_bridgeless(count, max_copies, seed, pair, workers)
    if family == "omc":
        return crosscheck_omc(count, seed, workers)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
