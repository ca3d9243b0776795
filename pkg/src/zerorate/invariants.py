"""Exact graph invariants: independence and clique numbers, chromatic and
b-fold chromatic numbers, exact rational fractional chromatic number, Lovász
theta brackets, orthogonal-rank brackets, directed edge chromatic number, and
the 13-vertex structure recomputation.

Everything returns either an exact value or a certified bracket; budgets
raise SolverTimeout carrying the bracket so callers can keep the interval.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

from . import cliques, coloring, lp
from .errors import InputError, InvalidCertificate, SizeExceeded, SolverTimeout, StructureViolation
from .graphs import DirectedGraph, Graph, complement, directed_line_graph, named_graph
from .theta import ThetaResult, lovasz_theta

__all__ = [
    "independence_number",
    "clique_number",
    "chromatic_number",
    "chromatic_bracket",
    "b_fold_chromatic",
    "fractional_chromatic",
    "lovasz_theta",
    "ThetaResult",
    "xi_bounds",
    "edge_chromatic_directed",
    "verify_g13_structure",
]


def independence_number(g: Graph) -> int:
    size, _ = cliques.max_independent_set(g.adj)
    return size


def maximum_independent_set(g: Graph) -> tuple[str, ...]:
    """Labels of one maximum independent set (deterministic)."""
    _, bits = cliques.max_independent_set(g.adj)
    return tuple(g.labels[i] for i in range(g.n) if bits >> i & 1)


def clique_number(g: Graph) -> int:
    size, _ = cliques.max_clique(g.adj)
    return size


def chromatic_bracket(
    g: Graph, budget_seconds: float = 300.0, seed_coloring=None
) -> coloring.ColoringResult:
    """Branch-and-bound bracket; lower/upper coincide when optimal."""
    if g.n > 256:
        raise SizeExceeded("chromatic solver accepts at most 256 vertices")
    return coloring.chromatic(g.adj, budget_seconds, seed_coloring)


def chromatic_number(g: Graph, budget_seconds: float = 300.0) -> int:
    res = chromatic_bracket(g, budget_seconds)
    if not res.optimal:
        raise SolverTimeout(
            f"chromatic number budget of {budget_seconds}s exhausted", (res.lower, res.upper)
        )
    return res.upper


def _blow_up(g: Graph, b: int) -> Graph:
    """Each vertex becomes a b-clique; copies of adjacent vertices are all adjacent."""
    n = g.n * b
    labels = [(lab, str(i + 1)) for lab in g.labels for i in range(b)]
    adj = [0] * n
    for u in range(g.n):
        for i in range(b):
            a = u * b + i
            for j in range(i + 1, b):
                c = u * b + j
                adj[a] |= 1 << c
                adj[c] |= 1 << a
            row = g.adj[u]
            while row:
                bit = row & -row
                v = bit.bit_length() - 1
                row &= row - 1
                if v < u:
                    continue
                for j in range(b):
                    c = v * b + j
                    adj[a] |= 1 << c
                    adj[c] |= 1 << a
    return Graph(labels, adj)


def b_fold_chromatic(g: Graph, b: int, budget_seconds: float = 300.0) -> int:
    """Least colors so every vertex gets b of them and adjacent sets are disjoint.

    Computed as the chromatic number of the b-fold blow-up.
    """
    if g.n > 64:
        raise SizeExceeded("b-fold solver accepts at most 64 vertices")
    if not 1 <= b <= 8:
        raise InputError("b must be between 1 and 8")
    blow = _blow_up(g, b)
    res = coloring.chromatic(blow.adj, budget_seconds)
    if not res.optimal:
        raise SolverTimeout(
            f"b-fold chromatic budget of {budget_seconds}s exhausted", (res.lower, res.upper)
        )
    return res.upper


def fractional_chromatic(g: Graph, budget_seconds: float = 300.0) -> Fraction:
    """Exact rational optimum of the covering LP over independent sets.

    Column generation in floats, then an exact rational re-solve whose dual is
    verified feasible by exact integer-weight pricing over the whole graph, so
    the returned value is certified on both sides.
    """
    value, _, _ = fractional_chromatic_certificate(g, budget_seconds)
    return value


def fractional_chromatic_certificate(
    g: Graph, budget_seconds: float = 300.0
) -> tuple[Fraction, dict[int, Fraction], list[Fraction]]:
    if g.n > 64:
        raise SizeExceeded("fractional chromatic solver accepts at most 64 vertices")
    n = g.n
    if n == 0:
        return Fraction(0), {}, []
    deadline = time.monotonic() + budget_seconds

    # one maximal independent set through every vertex guarantees coverage
    pool: list[int] = []
    seen = set()
    for v in range(n):
        col = cliques.greedy_maximal_independent_set(g.adj, 1 << v)
        if col not in seen:
            seen.add(col)
            pool.append(col)

    # float column generation (warm start only; exactness comes later)
    from scipy.optimize import linprog

    while True:
        a_ub = [[-1.0 if col >> v & 1 else 0.0 for col in pool] for v in range(n)]
        res = linprog(
            c=[1.0] * len(pool),
            A_ub=a_ub,
            b_ub=[-1.0] * n,
            bounds=[(0, None)] * len(pool),
            method="highs",
        )
        if not res.success:
            raise ArithmeticError(f"float covering LP failed: {res.message}")
        duals = [max(0.0, -m) for m in res.ineqlin.marginals]
        weight, bits = cliques.max_weight_independent_set(g.adj, duals)
        if weight <= 1.0 + 1e-9:
            break
        col = cliques.greedy_maximal_independent_set(g.adj, bits)
        if col in seen:
            break  # numerical stall; the exact phase takes over
        seen.add(col)
        pool.append(col)
        if time.monotonic() > deadline:
            break

    # exact phase: rational restricted solve + exact pricing until certified
    while True:
        value, x, y = lp.solve_cover_lp(pool, n)
        denom = math.lcm(*(f.denominator for f in y)) if y else 1
        wints = [int(f * denom) for f in y]
        wmax, bits = cliques.max_weight_independent_set(g.adj, wints)
        if wmax <= denom:
            x_map = {pool[idx]: frac for idx, frac in enumerate(x) if frac}
            return value, x_map, y
        if time.monotonic() > deadline:
            # y/wmax*denom is dual feasible, giving a certified lower bound
            lower = value * denom / wmax
            raise SolverTimeout(
                f"fractional chromatic budget of {budget_seconds}s exhausted",
                (lower, value),
            )
        col = cliques.greedy_maximal_independent_set(g.adj, bits)
        if col in seen:
            raise ArithmeticError("exact pricing repeated a column; this indicates a bug")
        seen.add(col)
        pool.append(col)


def xi_bounds(g: Graph, certificate=None, budget_seconds: float = 300.0) -> tuple[int, int]:
    """Certified bracket on the orthogonal rank of g.

    Lower: independence number (pairwise non-adjacent vertices need mutually
    orthogonal vectors) and the theta bracket floor. Upper: any proper
    coloring of the complement (basis-vector representation), improved by a
    validated certificate's dimension.
    """
    if g.n > 64:
        raise SizeExceeded("orthogonal rank bounds accept at most 64 vertices")
    lower = independence_number(g)
    try:
        th = lovasz_theta(g)
        lower = max(lower, math.ceil(th.lower - 1e-9))
    except SolverTimeout as exc:
        lower = max(lower, math.ceil(exc.bracket[0] - 1e-9))

    comp = complement(g)
    res = coloring.chromatic(comp.adj, budget_seconds)
    upper = res.upper  # any proper coloring of the complement certifies a representation
    if certificate is not None:
        from . import reps

        if tuple(certificate.target.labels) != tuple(g.labels):
            raise InvalidCertificate("certificate labels do not match the graph")
        try:
            reps.verify_representation(certificate, g)
        except Exception as exc:
            raise InvalidCertificate(f"certificate failed validation: {exc}") from exc
        upper = min(upper, certificate.dim)
    if lower > upper:
        raise ArithmeticError(f"orthogonal rank bracket crossed: ({lower},{upper})")
    return lower, upper


def edge_chromatic_directed(d: DirectedGraph, budget_seconds: float = 300.0) -> int:
    """Least colors on arcs so any two arcs walkable in sequence differ;
    exactly the chromatic number of the directed line graph."""
    if d.arc_count > 256:
        raise SizeExceeded("directed edge coloring accepts at most 256 arcs")
    return chromatic_number(directed_line_graph(d), budget_seconds)


# ---------------------------------------------------------------------------
# 13-vertex structure table

_TRIPLE_ROWS = (("M", "N", "Q"), ("M", "N", "R"), ("M", "P", "Q"), ("M", "P", "R"))
_PAIRED = {"M": "L", "L": "M", "N": "P", "P": "N", "Q": "R", "R": "Q"}
_TARGETS = ("X", "Y", "Z", "W")


def verify_g13_structure() -> list[dict]:
    """For each triple (u,v,w) with u in {M,L}, v in {N,P}, w in {Q,R}: the
    common neighbors among {X,Y,Z,W} of the triple and of its paired triple,
    recomputed from coordinates. Exactly one of the two sets must be nonempty.
    """
    g = named_graph("g13")
    idx = {lab: i for i, lab in enumerate(g.labels)}

    def common(triple):
        bits = (1 << g.n) - 1
        for lab in triple:
            bits &= g.adj[idx[lab]]
        return tuple(t for t in _TARGETS if bits >> idx[t] & 1)

    rows = []
    for u, v, w in _TRIPLE_ROWS:
        triple = (u, v, w)
        paired = (_PAIRED[u], _PAIRED[v], _PAIRED[w])
        n_triple = common(triple)
        n_paired = common(paired)
        if bool(n_triple) == bool(n_paired):
            raise StructureViolation(
                f"triples {triple} and {paired} have common-neighbor sets "
                f"{n_triple} and {n_paired}; exactly one must be nonempty"
            )
        rows.append(
            {
                "triple": triple,
                "common": n_triple,
                "paired_triple": paired,
                "paired_common": n_paired,
            }
        )
    return rows
