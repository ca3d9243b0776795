"""Independent brute-force oracles and random generators for the test suite.

Everything here recomputes quantities from first principles so the library's
optimized implementations are checked against straight enumeration.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import reduce

from zerorate.graphs import Graph, build_graph, or_product, strong_product
from zerorate.instances import FunctionInstance, make_instance
from zerorate.lp import solve_cover_lp


def brute_alpha(g: Graph) -> int:
    best = 0
    for bits in range(1 << g.n):
        ok = True
        row = bits
        while row:
            v = (row & -row).bit_length() - 1
            row &= row - 1
            if g.adj[v] & bits:
                ok = False
                break
        if ok:
            best = max(best, bin(bits).count("1"))
    return best


def brute_omega(g: Graph) -> int:
    comp_adj = [~g.adj[v] & ((1 << g.n) - 1) & ~(1 << v) for v in range(g.n)]
    best = 0
    for bits in range(1 << g.n):
        ok = True
        row = bits
        while row:
            v = (row & -row).bit_length() - 1
            row &= row - 1
            if comp_adj[v] & bits:
                ok = False
                break
        if ok:
            best = max(best, bin(bits).count("1"))
    return best


def brute_chromatic(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: -bin(g.adj[v]).count("1"))
    for k in range(1, g.n + 1):
        colors = [0] * g.n

        def assign(idx: int) -> bool:
            if idx == len(order):
                return True
            v = order[idx]
            for c in range(1, k + 1):
                row = g.adj[v]
                clash = False
                while row:
                    u = (row & -row).bit_length() - 1
                    row &= row - 1
                    if colors[u] == c:
                        clash = True
                        break
                if not clash:
                    colors[v] = c
                    if assign(idx + 1):
                        return True
                    colors[v] = 0
            return False

        if assign(0):
            return k
    return max(g.n, 1)


def all_independent_sets(g: Graph) -> list[int]:
    out = []
    for bits in range(1, 1 << g.n):
        ok = True
        row = bits
        while row:
            v = (row & -row).bit_length() - 1
            row &= row - 1
            if g.adj[v] & bits:
                ok = False
                break
        if ok:
            out.append(bits)
    return out


def brute_fractional_chromatic(g: Graph) -> Fraction:
    """Exact covering LP over the complete list of independent sets."""
    if g.n == 0:
        return Fraction(0)
    value, _, _ = solve_cover_lp(all_independent_sets(g), g.n)
    return value


def iterated_power(g: Graph, m: int, kind: str) -> Graph:
    from zerorate.graphs import flatten_product_labels

    prod = strong_product if kind == "strong" else or_product
    out = reduce(prod, [g] * m)
    return flatten_product_labels(out) if m > 1 else out


def brute_m_instance_graph(inst: FunctionInstance, m: int) -> Graph:
    """m-instance confusion graph straight from the definition: blocks are
    adjacent when some y-block supports both and the value blocks differ."""
    nx, ny = len(inst.x_labels), len(inst.y_labels)
    blocks = list(itertools.product(range(nx), repeat=m))
    labels = [tuple(inst.x_labels[i] for i in blk) for blk in blocks]
    edges = []
    for a in range(len(blocks)):
        for b in range(a + 1, len(blocks)):
            xa, xb = blocks[a], blocks[b]
            hit = False
            for ys in itertools.product(range(ny), repeat=m):
                if all(
                    inst.support[xa[t]] >> ys[t] & 1 and inst.support[xb[t]] >> ys[t] & 1
                    for t in range(m)
                ) and any(
                    inst.values[xa[t]][ys[t]] != inst.values[xb[t]][ys[t]]
                    for t in range(m)
                ):
                    hit = True
                    break
            if hit:
                edges.append((a, b))
    return build_graph(labels, edges)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    labels = [f"v{i}" for i in range(n)]
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(labels, edges)


def random_graph_no_isolated(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.edge_count and all(g.degree(v) for v in range(g.n)):
            return g


def random_instance(
    rng: random.Random, nx: int, ny: int, nz: int = 2
) -> FunctionInstance:
    xs = [f"x{i}" for i in range(nx)]
    ys = [f"y{j}" for j in range(ny)]
    zs = [f"z{k}" for k in range(nz)]
    table = {}
    for x in xs:
        cols = [y for y in ys if rng.random() < 0.6]
        if not cols:
            cols = [rng.choice(ys)]
        for y in cols:
            table[(x, y)] = rng.choice(zs)
    return make_instance(xs, ys, zs, table)
