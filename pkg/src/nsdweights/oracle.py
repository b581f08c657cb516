"""Exhaustive search over edge weightings; the ground truth for every other procedure.

The search assigns edge copies in canonical order, low weight before high, so the
first complete assignment reached is the lexicographically first proper weighting.
A branch is cut as soon as two adjacent vertices whose incident copies are all
assigned have equal weighted degree; no branch containing a proper weighting is
ever cut, so the search is exhaustive.
"""

from __future__ import annotations

import sys

from .errors import BudgetExceeded
from .graph import MultiGraph
from .weighting import Weighting, as_increments, as_pair

DEFAULT_BUDGET = 22


class _Plan:
    def __init__(self, g: MultiGraph, increments):
        copies = g.copies()
        self.copies = copies
        last = [-1] * g.n
        for i, (u, v, _) in enumerate(copies):
            last[u] = i
            last[v] = i
        checks: list[list[tuple[int, int]]] = [[] for _ in copies]
        for u, v in g.pairs():
            checks[max(last[u], last[v])].append((u, v))
        self.checks = checks
        self.last = last
        self.increments = as_increments(g, increments)


def _check_budget(g: MultiGraph, edge_budget: int) -> None:
    if g.num_copies() > edge_budget:
        raise BudgetExceeded(g.num_copies(), edge_budget)


def oracle_exists_proper(
    g: MultiGraph, pair=(0, 1), increments=None, edge_budget: int = DEFAULT_BUDGET, stats=None
) -> Weighting | None:
    """Lexicographically first proper weighting, or ``None`` if the graph has none."""
    _check_budget(g, edge_budget)
    pair = as_pair(pair)
    plan = _Plan(g, increments)
    copies, checks = plan.copies, plan.checks
    m = len(copies)
    deg = list(plan.increments)
    choice = [0] * m
    values = (pair.a, pair.b)
    nodes = 0

    def rec(i: int) -> bool:
        nonlocal nodes
        if i == m:
            return True
        u, v, _ = copies[i]
        todo = checks[i]
        for c in (0, 1):
            nodes += 1
            x = values[c]
            deg[u] += x
            deg[v] += x
            ok = True
            for a, b in todo:
                if deg[a] == deg[b]:
                    ok = False
                    break
            if ok:
                choice[i] = c
                if rec(i + 1):
                    return True
            deg[u] -= x
            deg[v] -= x
        return False

    if m == 0:
        found = True
    else:
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, m + 100))
        found = rec(0)
    if stats is not None:
        stats["nodes"] = nodes
    if not found:
        return None
    return Weighting(g, tuple(choice), pair, plan.increments)


def achievable_degree_set(
    g: MultiGraph, v: int, pair=(0, 1), increments=None, edge_budget: int = DEFAULT_BUDGET
) -> set[int]:
    """Weighted degrees of ``v`` over all proper weightings (empty iff none is proper)."""
    _check_budget(g, edge_budget)
    pair = as_pair(pair)
    plan = _Plan(g, increments)
    copies, checks = plan.copies, plan.checks
    m = len(copies)
    deg = list(plan.increments)
    values = (pair.a, pair.b)
    found: set[int] = set()
    v_done = plan.last[v]

    if m == 0:
        return {deg[v]}

    def rec(i: int) -> None:
        if i == m:
            found.add(deg[v])
            return
        a_, b_, _ = copies[i]
        todo = checks[i]
        for c in (0, 1):
            x = values[c]
            deg[a_] += x
            deg[b_] += x
            ok = not (i == v_done and deg[v] in found)
            if ok:
                for a, b in todo:
                    if deg[a] == deg[b]:
                        ok = False
                        break
            if ok:
                rec(i + 1)
            deg[a_] -= x
            deg[b_] -= x

    if v_done == -1:
        # isolated vertex: its degree is its increment whenever the rest is proper
        return {deg[v]} if oracle_exists_proper(g, pair, plan.increments, edge_budget) else set()
    rec(0)
    return found


def count_proper(g: MultiGraph, pair=(0, 1), increments=None, edge_budget: int = DEFAULT_BUDGET) -> int:
    """Number of proper weightings (used in tests and reports)."""
    _check_budget(g, edge_budget)
    pair = as_pair(pair)
    plan = _Plan(g, increments)
    copies, checks = plan.copies, plan.checks
    m = len(copies)
    deg = list(plan.increments)
    values = (pair.a, pair.b)

    def rec(i: int) -> int:
        if i == m:
            return 1
        u, v, _ = copies[i]
        total = 0
        for c in (0, 1):
            x = values[c]
            deg[u] += x
            deg[v] += x
            if all(deg[a] != deg[b] for a, b in checks[i]):
                total += rec(i + 1)
            deg[u] -= x
            deg[v] -= x
        return total

    return rec(0) if m else 1
