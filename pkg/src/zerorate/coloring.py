"""Exact graph coloring: DSATUR branch and bound with a clique lower bound.

Vertex selection is maximum saturation with lowest-index tie-break, which
makes every run deterministic. Budgets return certified brackets instead of
partial answers: the lower bound is a clique (or an exhausted search level),
the upper bound is a verified proper coloring.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass

from . import cliques
from .errors import SolverTimeout


@dataclass(frozen=True)
class ColoringResult:
    lower: int
    upper: int
    coloring: tuple[int, ...]  # colors 1..upper, per vertex
    optimal: bool


def greedy_dsatur(adj: tuple[int, ...], seed: dict[int, int] | None = None) -> list[int]:
    """DSATUR greedy coloring; returns 1-based colors. ``seed`` pre-assigns."""
    n = len(adj)
    colors = [0] * n
    neighbor_colors = [0] * n  # bitmask of colors (bit c-1) seen on neighbors
    if seed:
        for v, c in seed.items():
            colors[v] = c
            row = adj[v]
            while row:
                bit = row & -row
                neighbor_colors[bit.bit_length() - 1] |= 1 << (c - 1)
                row &= row - 1
    for _ in range(n - sum(1 for c in colors if c)):
        pick = -1
        pick_sat = -1
        for v in range(n):
            if colors[v]:
                continue
            sat = neighbor_colors[v].bit_count()
            if sat > pick_sat:
                pick, pick_sat = v, sat
        # lowest color absent from the neighborhood
        c = 1
        while neighbor_colors[pick] >> (c - 1) & 1:
            c += 1
        colors[pick] = c
        row = adj[pick]
        while row:
            bit = row & -row
            neighbor_colors[bit.bit_length() - 1] |= 1 << (c - 1)
            row &= row - 1
    return colors


def verify_coloring(adj: tuple[int, ...], colors) -> bool:
    n = len(adj)
    for v in range(n):
        if not colors[v]:
            return False
        row = adj[v]
        while row:
            bit = row & -row
            u = bit.bit_length() - 1
            if u > v and colors[u] == colors[v]:
                return False
            row &= row - 1
    return True


def chromatic(
    adj: tuple[int, ...],
    budget_seconds: float = 300.0,
    seed_coloring=None,
) -> ColoringResult:
    """Exact chromatic number within a time budget.

    ``seed_coloring`` optionally supplies a known proper coloring used as the
    initial upper bound. On budget exhaustion the best verified bracket is
    returned with optimal=False; callers decide whether that is an error.
    """
    n = len(adj)
    if n == 0:
        return ColoringResult(0, 0, (), True)
    deadline = time.monotonic() + budget_seconds

    # a timed-out clique search still yields a valid clique, so the lower
    # bound and the symmetry-breaking pre-coloring below stay sound
    clique_size, clique_bits = cliques.max_clique(adj, deadline)
    lower = max(clique_size, 1)

    best = greedy_dsatur(adj)
    best_k = max(best)
    if seed_coloring is not None:
        seeded = list(seed_coloring)
        if verify_coloring(adj, seeded) and max(seeded) < best_k:
            best, best_k = seeded, max(seeded)
    if best_k == lower:
        return ColoringResult(lower, best_k, tuple(best), True)

    # pre-color the clique to kill color symmetry
    clique_vertices = []
    b = clique_bits
    while b:
        bit = b & -b
        clique_vertices.append(bit.bit_length() - 1)
        b &= b - 1

    colors = [0] * n
    neighbor_colors = [0] * n
    for idx, v in enumerate(clique_vertices):
        colors[v] = idx + 1
        row = adj[v]
        while row:
            bit = row & -row
            neighbor_colors[bit.bit_length() - 1] |= 1 << idx
            row &= row - 1

    uncolored = [v for v in range(n) if not colors[v]]
    node_counter = 0
    timed_out = False

    def descend(num_colored: int, used: int) -> None:
        nonlocal best, best_k, node_counter, timed_out
        if timed_out:
            return
        node_counter += 1
        if node_counter % 512 == 0 and time.monotonic() > deadline:
            timed_out = True
            return
        if num_colored == n:
            if used < best_k:
                best_k = used
                best = colors.copy()
            return
        if used >= best_k:
            return
        # max saturation, lowest index tie-break
        pick = -1
        pick_sat = -1
        for v in uncolored:
            if colors[v]:
                continue
            sat = neighbor_colors[v].bit_count()
            if sat > pick_sat:
                pick, pick_sat = v, sat
        limit = min(used + 1, best_k - 1)
        forbidden = neighbor_colors[pick]
        row = adj[pick]
        neigh = []
        while row:
            bit = row & -row
            neigh.append(bit.bit_length() - 1)
            row &= row - 1
        for c in range(1, limit + 1):
            if forbidden >> (c - 1) & 1:
                continue
            colors[pick] = c
            cbit = 1 << (c - 1)
            touched = []
            for u in neigh:
                if not neighbor_colors[u] & cbit:
                    neighbor_colors[u] |= cbit
                    touched.append(u)
            descend(num_colored + 1, max(used, c))
            colors[pick] = 0
            for u in touched:
                neighbor_colors[u] &= ~cbit
            if timed_out:
                return

    if sys.getrecursionlimit() < 2 * n + 100:
        sys.setrecursionlimit(2 * n + 100)
    descend(n - len(uncolored), len(clique_vertices))

    if timed_out:
        return ColoringResult(lower, best_k, tuple(best), False)
    # search exhausted: nothing below best_k exists
    return ColoringResult(best_k, best_k, tuple(best), True)


def chromatic_or_raise(adj: tuple[int, ...], budget_seconds: float = 300.0, seed_coloring=None) -> ColoringResult:
    res = chromatic(adj, budget_seconds, seed_coloring)
    if not res.optimal:
        raise SolverTimeout(
            f"chromatic number budget of {budget_seconds}s exhausted", (res.lower, res.upper)
        )
    return res
