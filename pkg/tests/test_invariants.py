"""Exact invariants against brute-force oracles and pinned values."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import networkx as nx
import pytest

from zerorate.errors import InvalidCertificate, SizeExceeded, SolverTimeout
from zerorate.graphs import bidirect, complement, directed_line_graph, named_graph, power
from zerorate.invariants import (
    b_fold_chromatic,
    chromatic_bracket,
    chromatic_number,
    clique_number,
    edge_chromatic_directed,
    fractional_chromatic,
    fractional_chromatic_certificate,
    independence_number,
    maximum_independent_set,
    verify_g13_structure,
    xi_bounds,
)
from zerorate.reps import OrthRep, builtin_representation
from zerorate.theta import lovasz_theta

from oracles import (
    brute_alpha,
    brute_chromatic,
    brute_fractional_chromatic,
    brute_omega,
    random_graph,
)


def test_alpha_omega_chi_match_brute_force():
    rng = random.Random(21)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8))
        assert independence_number(g) == brute_alpha(g)
        assert clique_number(g) == brute_omega(g)
        assert chromatic_number(g) == brute_chromatic(g)


def test_maximum_independent_set_is_independent_and_maximum():
    rng = random.Random(22)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 8))
        s = maximum_independent_set(g)
        assert len(s) == independence_number(g)
        idx = [g.index(lab) for lab in s]
        assert all(not g.has_edge(i, j) for i in idx for j in idx if i < j)


def test_clique_number_matches_networkx():
    rng = random.Random(23)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 9))
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        assert clique_number(g) == max(len(c) for c in nx.find_cliques(h))


def test_fractional_chromatic_matches_full_lp():
    rng = random.Random(24)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 6))
        assert fractional_chromatic(g) == brute_fractional_chromatic(g)


def test_fractional_certificate_is_a_cover():
    rng = random.Random(25)
    for _ in range(15):
        g = random_graph(rng, rng.randint(2, 7))
        value, x_map, duals = fractional_chromatic_certificate(g)
        assert sum(x_map.values()) == value
        for col in x_map:
            members = [v for v in range(g.n) if col >> v & 1]
            assert all(
                not g.has_edge(i, j) for i in members for j in members if i < j
            )
        for v in range(g.n):
            assert sum(w for col, w in x_map.items() if col >> v & 1) >= 1
        # dual: a fractional clique of the same total weight
        assert sum(duals) == value


def test_pentagon_invariants():
    g = named_graph("pentagon")
    assert independence_number(g) == 2
    assert clique_number(g) == 2
    assert chromatic_number(g) == 3
    assert fractional_chromatic(g) == Fraction(5, 2)
    th = lovasz_theta(g)
    assert abs(th.lower - math.sqrt(5)) <= 1e-6
    assert abs(th.upper - math.sqrt(5)) <= 1e-6
    assert th.lower <= math.sqrt(5) <= th.upper


def test_pentagon_powers():
    g = named_graph("pentagon")
    strong2 = power(g, 2, "strong")
    assert independence_number(strong2) == 5
    assert chromatic_number(strong2) == 5
    or2 = power(g, 2, "or")
    assert chromatic_number(or2) == 8
    assert fractional_chromatic(or2) == Fraction(25, 4)


def test_b_fold_chromatic():
    g = named_graph("pentagon")
    assert b_fold_chromatic(g, 1) == 3
    assert b_fold_chromatic(g, 2) == 5
    k3 = named_graph("complete(3)")
    assert b_fold_chromatic(k3, 2) == 6
    assert b_fold_chromatic(k3, 3) == 9


def test_b_fold_interpolates_toward_fractional():
    rng = random.Random(26)
    for _ in range(10):
        g = random_graph(rng, rng.randint(2, 5))
        cf = fractional_chromatic(g)
        for b in (1, 2):
            xb = b_fold_chromatic(g, b)
            assert Fraction(xb, b) >= cf
        assert b_fold_chromatic(g, 1) == chromatic_number(g)


def test_g13_invariants():
    g = named_graph("g13")
    assert independence_number(g) == 5
    assert clique_number(g) == 3
    assert chromatic_number(g) == 4
    assert fractional_chromatic(g) == Fraction(35, 11)


def test_line_graph_invariants():
    lg = directed_line_graph(bidirect(named_graph("g13")))
    assert lg.n == 48
    assert clique_number(lg) == 3
    assert chromatic_number(lg) == 4
    assert fractional_chromatic(lg) == Fraction(3)


def test_edge_chromatic_directed_equals_line_graph_chromatic():
    g13 = named_graph("g13")
    assert edge_chromatic_directed(bidirect(g13)) == 4
    rng = random.Random(27)
    for _ in range(5):
        g = random_graph(rng, rng.randint(2, 5))
        d = bidirect(g)
        assert edge_chromatic_directed(d) == chromatic_number(directed_line_graph(d))


def test_theta_known_values():
    assert abs(lovasz_theta(named_graph("complete(4)")).upper - 1) <= 1e-6
    assert abs(lovasz_theta(named_graph("empty(4)")).lower - 4) <= 1e-6
    g13 = named_graph("g13")
    th = lovasz_theta(g13)
    assert th.lower <= th.upper
    assert th.upper - th.lower <= 1e-5
    assert independence_number(g13) <= th.upper + 1e-6


def test_theta_between_alpha_and_fractional_clique_cover():
    rng = random.Random(28)
    for _ in range(15):
        g = random_graph(rng, rng.randint(2, 8))
        th = lovasz_theta(g)
        assert brute_alpha(g) <= th.upper + 1e-6
        # theta(G) <= chif(complement(G))
        assert th.lower - 1e-6 <= float(fractional_chromatic(complement(g)))


def test_xi_bounds_pentagon_complement():
    comp = complement(named_graph("pentagon"))
    assert xi_bounds(comp) == (3, 3)
    cert = builtin_representation("c5bar")
    assert xi_bounds(comp, cert) == (3, 3)


def test_xi_bounds_reject_bad_certificate():
    comp = complement(named_graph("pentagon"))
    good = builtin_representation("c5bar")
    bad = OrthRep(good.target, good.dim, good.mode, (good.vectors[1],) + good.vectors[1:])
    with pytest.raises(InvalidCertificate):
        xi_bounds(comp, bad)
    with pytest.raises(InvalidCertificate):
        xi_bounds(named_graph("pentagon"), good)


def test_xi_bounds_are_sane_on_random_graphs():
    rng = random.Random(29)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 7))
        lo, hi = xi_bounds(g)
        assert brute_alpha(g) <= lo <= hi <= brute_chromatic(complement(g))


def test_chromatic_budget_yields_bracket():
    or3 = power(named_graph("pentagon"), 3, "or")
    res = chromatic_bracket(or3, budget_seconds=0.0)
    # chif(or3) = (5/2)^3 pins the true value inside [16, upper]
    assert res.lower <= res.upper
    assert res.upper >= 16
    assert not res.optimal
    from zerorate.coloring import verify_coloring

    assert verify_coloring(or3.adj, res.coloring)
    with pytest.raises(SolverTimeout):
        chromatic_number(or3, budget_seconds=0.0)


def test_size_guards():
    big = named_graph("h(9)")  # 256 vertices
    with pytest.raises(SizeExceeded):
        fractional_chromatic(big)
    with pytest.raises(SizeExceeded):
        xi_bounds(big)


def test_g13_structure_table():
    rows = verify_g13_structure()
    assert len(rows) == 4
    for row in rows:
        assert bool(row["common"]) != bool(row["paired_common"])
    assert rows[0]["triple"] == ("M", "N", "Q")
