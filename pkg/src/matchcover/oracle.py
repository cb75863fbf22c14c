"""Brute-force ground truth for small instances.

Everything here is independent of the solver pipeline: matching numbers come
from a bitmask subset DP, cover numbers from exhaustive star-forest search,
and the derived-graph cover number from capacity-bounded assignment.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .dstar import GStar
from .graph import Graph


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 12
    max_edges: int = 24
    timeout_s: float | None = None


class OracleBudgetError(ValueError):
    """Instance exceeds what the brute-force oracle will attempt."""


def _check_budget(n: int, m: int, budget: OracleBudget | None) -> OracleBudget:
    if budget is None:
        budget = OracleBudget()
    if n > budget.max_vertices:
        raise OracleBudgetError(
            f"{n} vertices exceeds oracle budget of {budget.max_vertices}"
        )
    if m > budget.max_edges:
        raise OracleBudgetError(
            f"{m} edges exceeds oracle budget of {budget.max_edges}"
        )
    return budget


def _neighbor_masks(g: Graph) -> list[int]:
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    return nbr


def _nu_table(g: Graph) -> list[int]:
    """nu of every induced subgraph, indexed by vertex bitmask."""
    nbr = _neighbor_masks(g)
    size = 1 << g.n
    f = [0] * size
    for mask in range(1, size):
        vbit = mask & -mask
        v = vbit.bit_length() - 1
        rest = mask ^ vbit
        best = f[rest]
        cand = nbr[v] & rest
        while cand:
            ubit = cand & -cand
            val = 1 + f[rest ^ ubit]
            if val > best:
                best = val
            cand ^= ubit
        f[mask] = best
    return f


def brute_nu(g: Graph, budget: OracleBudget | None = None) -> int:
    """Exact maximum matching cardinality by subset DP."""
    _check_budget(g.n, g.m, budget)
    return _nu_table(g)[(1 << g.n) - 1]


def brute_d_set(g: Graph, budget: OracleBudget | None = None) -> frozenset[int]:
    """{v : nu(g - v) = nu(g)}, straight from the definition."""
    _check_budget(g.n, g.m, budget)
    f = _nu_table(g)
    full = (1 << g.n) - 1
    nu = f[full]
    return frozenset(v for v in range(g.n) if f[full ^ (1 << v)] == nu)


def brute_mc(g: Graph, budget: OracleBudget | None = None) -> int:
    """Exact matching cover number.

    A minimal cover is a spanning star forest, and a star forest with
    maximum star size k splits into k matchings, so mc equals the minimum
    over spanning star forests of the maximum star size.  The search places
    the star containing the lowest uncovered vertex, memoized on the
    still-uncovered set, sweeping k upward.
    """
    budget = _check_budget(g.n, g.m, budget)
    if g.n == 1:
        raise ValueError("a single vertex has no matching cover")
    for v in range(g.n):
        if g.degree(v) == 0:
            raise ValueError(f"isolated vertex {v} cannot be covered")
    deadline = (
        time.monotonic() + budget.timeout_s if budget.timeout_s is not None else None
    )
    nbr = _neighbor_masks(g)
    full = (1 << g.n) - 1

    for k in range(1, g.n):
        memo: dict[int, bool] = {}

        def feasible(mask: int) -> bool:
            if mask == 0:
                return True
            cached = memo.get(mask)
            if cached is not None:
                return cached
            if deadline is not None and time.monotonic() > deadline:
                raise OracleBudgetError("oracle timeout exceeded")
            vbit = mask & -mask
            v = vbit.bit_length() - 1
            ok = False
            avail = [1 << u for u in range(g.n) if nbr[v] & mask & (1 << u)]
            # v as a star center
            for r in range(1, min(k, len(avail)) + 1):
                for ends in combinations(avail, r):
                    if feasible(mask ^ vbit ^ sum(ends)):
                        ok = True
                        break
                if ok:
                    break
            # v as an end of an adjacent center
            if not ok:
                for cbit in avail:
                    c = cbit.bit_length() - 1
                    others = [
                        1 << u
                        for u in range(g.n)
                        if nbr[c] & mask & (1 << u) and u != v
                    ]
                    for r in range(0, min(k - 1, len(others)) + 1):
                        for extra in combinations(others, r):
                            if feasible(mask ^ vbit ^ cbit ^ sum(extra)):
                                ok = True
                                break
                        if ok:
                            break
                    if ok:
                        break
            memo[mask] = ok
            return ok

        if feasible(full):
            return k
    raise RuntimeError("unreachable: a spanning star forest always exists")


def brute_md(gs: GStar, budget: OracleBudget | None = None) -> int:
    """Minimum over star covers of the maximum star size; 0 with no D-vertices.

    Feasibility of a given bound is checked by augmenting-path assignment
    with each A-vertex split into that many slots.
    """
    if not gs.d_vertices:
        return 0
    _check_budget(gs.size, len(gs.edges), budget)
    for k in range(1, len(gs.d_vertices) + 1):
        if _assignable(gs, k):
            return k
    raise RuntimeError("unreachable: every D-vertex has an A-neighbour")


def _assignable(gs: GStar, k: int) -> bool:
    slot_owner: dict[tuple[int, int], int] = {}

    def place(d: int, seen: set[tuple[int, int]]) -> bool:
        for a in gs.adj[d]:
            for s in range(k):
                slot = (a, s)
                if slot in seen:
                    continue
                seen.add(slot)
                if slot not in slot_owner or place(slot_owner[slot], seen):
                    slot_owner[slot] = d
                    return True
        return False

    return all(place(d, set()) for d in gs.d_vertices)
