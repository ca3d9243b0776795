"""Exact maximum clique / independent set solvers on bitset adjacency.

Branch and bound with a greedy-coloring upper bound (unweighted) or a
class-maximum weighted coloring bound (weighted). Deterministic: vertex
order and tie-breaks are fixed, no randomness anywhere.
"""

from __future__ import annotations

import sys
import time


def _ensure_recursion(n: int) -> None:
    need = 2 * n + 100
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def max_clique(adj: tuple[int, ...], deadline: float | None = None) -> tuple[int, int]:
    """Largest clique; returns (size, vertex bitset).

    With a deadline (time.monotonic timestamp) the search may stop early and
    return the best clique found so far, which is still a valid clique.
    """
    n = len(adj)
    if n == 0:
        return 0, 0
    _ensure_recursion(n)
    best_size = 0
    best_set = 0
    node_counter = 0
    timed_out = False

    def expand(cand: int, size: int, cur: int) -> None:
        nonlocal best_size, best_set, node_counter, timed_out
        if timed_out:
            return
        node_counter += 1
        if deadline is not None and node_counter % 512 == 0 and time.monotonic() > deadline:
            timed_out = True
            return
        if cand == 0:
            if size > best_size:
                best_size, best_set = size, cur
            return
        # greedy coloring of the candidate set; color index bounds clique size
        order: list[int] = []
        bounds: list[int] = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            q = uncolored
            while q:
                bit = q & -q
                v = bit.bit_length() - 1
                q &= ~adj[v]
                q &= ~bit
                uncolored &= ~bit
                order.append(v)
                bounds.append(color)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best_size:
                return
            v = order[i]
            bit = 1 << v
            expand(cand & adj[v], size + 1, cur | bit)
            if timed_out:
                return
            cand &= ~bit

    expand((1 << n) - 1, 0, 0)
    if best_size == 0:
        # timed out before completing any branch; a single vertex is a clique
        return 1, 1
    return best_size, best_set


def max_independent_set(adj: tuple[int, ...]) -> tuple[int, int]:
    """Largest independent set; returns (size, vertex bitset)."""
    n = len(adj)
    full = (1 << n) - 1
    comp = tuple((full & ~row) & ~(1 << i) for i, row in enumerate(adj))
    return max_clique(comp)


def max_weight_clique(adj: tuple[int, ...], weights) -> tuple:
    """Maximum-weight clique for nonnegative weights (int or float).

    Returns (weight, vertex bitset). Zero-weight vertices are dropped up
    front; they never improve the objective.
    """
    n = len(adj)
    _ensure_recursion(n)
    zero = 0 * (weights[0] if n else 0)
    start = 0
    for v in range(n):
        if weights[v] > zero:
            start |= 1 << v
    best_weight = zero
    best_set = 0

    def expand(cand: int, weight, cur: int) -> None:
        nonlocal best_weight, best_set
        if cand == 0:
            if weight > best_weight:
                best_weight, best_set = weight, cur
            return
        # weighted coloring bound: classes are independent in the candidate
        # subgraph, a clique takes at most the heaviest vertex of each class
        order: list[int] = []
        bounds: list = []
        uncolored = cand
        total = zero
        while uncolored:
            q = uncolored
            class_max = zero
            members: list[int] = []
            while q:
                bit = q & -q
                v = bit.bit_length() - 1
                q &= ~adj[v]
                q &= ~bit
                uncolored &= ~bit
                members.append(v)
                if weights[v] > class_max:
                    class_max = weights[v]
            total = total + class_max
            for v in members:
                order.append(v)
                bounds.append(total)
        for i in range(len(order) - 1, -1, -1):
            if weight + bounds[i] <= best_weight:
                return
            v = order[i]
            bit = 1 << v
            expand(cand & adj[v], weight + weights[v], cur | bit)
            cand &= ~bit

    expand(start, zero, 0)
    return best_weight, best_set


def max_weight_independent_set(adj: tuple[int, ...], weights) -> tuple:
    """Maximum-weight independent set; returns (weight, vertex bitset)."""
    n = len(adj)
    full = (1 << n) - 1
    comp = tuple((full & ~row) & ~(1 << i) for i, row in enumerate(adj))
    return max_weight_clique(comp, weights)


def greedy_maximal_independent_set(adj: tuple[int, ...], seed_bits: int) -> int:
    """Extend a set (assumed independent) to a maximal one, lowest index first."""
    n = len(adj)
    chosen = seed_bits
    banned = seed_bits
    b = seed_bits
    while b:
        bit = b & -b
        banned |= adj[bit.bit_length() - 1]
        b &= b - 1
    for v in range(n):
        bit = 1 << v
        if banned & bit:
            continue
        chosen |= bit
        banned |= bit | adj[v]
    return chosen
