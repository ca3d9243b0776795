"""Seeded identity suites shared by the property tests and the acceptance
gate. Each function raises AssertionError on the first violated identity.

Theta comparisons allow 1e-5 of numerical slack; everything else is exact.
"""

from __future__ import annotations

import random

from zerorate.coloring import greedy_dsatur
from zerorate.graphs import Graph, build_graph, complement, or_product, strong_product
from zerorate.instances import build_confusion_graph, build_m_instance_graph
from zerorate.invariants import (
    chromatic_number,
    fractional_chromatic,
    independence_number,
    xi_bounds,
)
from zerorate.reps import (
    coloring_to_representation,
    retarget_representation,
    tensor_representation,
)
from zerorate.theta import lovasz_theta

from oracles import random_graph, random_instance

THETA_TOL = 1e-5


def _pair(rng: random.Random, nmax: int = 5):
    g = random_graph(rng, rng.randint(2, nmax))
    h = random_graph(rng, rng.randint(2, nmax))
    return g, h


def suite_complement_of_products(rng: random.Random, cases: int = 50) -> None:
    """complement(G x H) equals complement(G) OR complement(H), labels included."""
    for _ in range(cases):
        g, h = _pair(rng)
        assert complement(strong_product(g, h)) == or_product(complement(g), complement(h))
        assert complement(or_product(g, h)) == strong_product(complement(g), complement(h))


def suite_independence_of_products(rng: random.Random, cases: int = 50) -> None:
    """alpha multiplies over the OR product and bounds the strong product."""
    for _ in range(cases):
        g, h = _pair(rng)
        a_or = independence_number(or_product(g, h))
        a_strong = independence_number(strong_product(g, h))
        assert a_or == independence_number(g) * independence_number(h)
        assert a_or <= a_strong


def suite_chromatic_of_products(rng: random.Random, cases: int = 50) -> None:
    """chi(strong) <= chi(OR) <= chi(G) * chi(H)."""
    for _ in range(cases):
        g, h = _pair(rng)
        c_strong = chromatic_number(strong_product(g, h))
        c_or = chromatic_number(or_product(g, h))
        assert c_strong <= c_or <= chromatic_number(g) * chromatic_number(h)


def suite_fractional_multiplicative(rng: random.Random, cases: int = 50) -> None:
    """chif multiplies exactly (as rationals) over the OR product."""
    for _ in range(cases):
        g, h = _pair(rng)
        assert fractional_chromatic(or_product(g, h)) == fractional_chromatic(
            g
        ) * fractional_chromatic(h)


def suite_theta_consequences(rng: random.Random, cases: int = 50) -> None:
    """alpha <= theta, theta multiplies over both products, theta <= xi."""
    for _ in range(cases):
        g, h = _pair(rng)
        tg, th = lovasz_theta(g), lovasz_theta(h)
        assert independence_number(g) <= tg.upper + THETA_TOL
        prod = tg.upper * th.upper
        for build in (or_product, strong_product):
            tp = lovasz_theta(build(g, h))
            assert tp.lower - THETA_TOL <= prod
            assert tp.upper + THETA_TOL >= tg.lower * th.lower
        _, xi_hi = xi_bounds(g)
        assert tg.lower - THETA_TOL <= xi_hi


def suite_chi_subadditive(rng: random.Random, cases: int = 50) -> None:
    """chi(G^(2)) <= chi(G^(1))^2, shown by a product coloring that must be
    proper on the 2-instance graph, then confirmed exactly."""
    for _ in range(cases):
        inst = random_instance(rng, rng.randint(2, 4), rng.randint(2, 4))
        g1 = build_confusion_graph(inst)
        g2 = build_m_instance_graph(inst, 2)
        colors1 = greedy_dsatur(g1.adj)
        k = max(colors1)
        pair_color = {}
        for a, lab in enumerate(g2.labels):
            i = g1.index(lab[0])
            j = g1.index(lab[1])
            pair_color[a] = (colors1[i] - 1) * k + colors1[j]
        for u, v in g2.edges():
            assert pair_color[u] != pair_color[v], "product coloring must be proper"
        assert chromatic_number(g2) <= chromatic_number(g1) ** 2


def _random_rep(rng: random.Random, nmax: int = 5):
    g = random_graph(rng, rng.randint(2, nmax))
    comp = complement(g)
    colors = greedy_dsatur(comp.adj)
    return coloring_to_representation(
        g, {lab: colors[i] for i, lab in enumerate(g.labels)}
    )


def suite_tensor_validity(rng: random.Random, cases: int = 50) -> None:
    """Tensor products of valid representations are valid for the strong
    product of the targets, and they transport onto supergraphs."""
    for _ in range(cases):
        r1 = _random_rep(rng)
        r2 = _random_rep(rng)
        t = tensor_representation(r1, r2)  # verifies on build
        assert t.dim == r1.dim * r2.dim
        target = t.target
        extra = [
            (i, j)
            for i in range(target.n)
            for j in range(i + 1, target.n)
            if not target.has_edge(i, j) and rng.random() < 0.3
        ]
        if extra:
            edges = list(target.edges()) + extra
            super_g = build_graph(list(target.labels), edges)
            retarget_representation(t, super_g)  # verifies on build


ALL_SUITES = (
    ("complement of products", suite_complement_of_products),
    ("independence of products", suite_independence_of_products),
    ("chromatic of products", suite_chromatic_of_products),
    ("fractional multiplicativity", suite_fractional_multiplicative),
    ("theta consequences", suite_theta_consequences),
    ("chi sub-additivity", suite_chi_subadditive),
    ("tensor validity", suite_tensor_validity),
)
