"""Function instances, confusion graphs, collapse prediction, constructors."""

from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest

from zerorate.errors import AssumptionViolation, InputError, IsolatedVertex, SizeExceeded
from zerorate.graphs import complement, named_graph, power
from zerorate.instances import (
    Collapse,
    build_confusion_graph,
    build_m_instance_graph,
    builtin_instance,
    classify_nonedges,
    construct_or_instance,
    construct_strong_instance,
    instance_from_json_dict,
    instance_to_json_dict,
    make_instance,
    predict_product_collapse,
    with_uniform_probs,
)

from oracles import brute_m_instance_graph, random_graph_no_isolated, random_instance


def test_make_instance_round_trip():
    inst = make_instance(
        ["a", "b"],
        ["u", "v"],
        ["0", "1"],
        {("a", "u"): "0", ("b", "u"): "1", ("b", "v"): "0"},
    )
    assert inst.supported(0, 0) and not inst.supported(0, 1)
    assert inst.value_label(1, 0) == "1"
    with pytest.raises(InputError):
        inst.value_label(0, 1)


def test_instance_validation():
    with pytest.raises(InputError):
        make_instance(["a"], ["u"], ["0"], {("a", "w"): "0"})
    with pytest.raises(InputError):
        make_instance(["a"], ["u"], ["0"], {("a", "u"): "9"})
    with pytest.raises(AssumptionViolation):
        # x=b has no supported y
        make_instance(["a", "b"], ["u"], ["0"], {("a", "u"): "0"})
    with pytest.raises(AssumptionViolation):
        make_instance(
            ["a"], ["u", "v"], ["0"],
            {("a", "u"): "0", ("a", "v"): "0"},
            probs={("a", "u"): Fraction(1, 2), ("a", "v"): Fraction(1, 3)},
        )


def test_uniform_probs_sum_to_one():
    inst = builtin_instance("f_tilde")
    assert inst.probs is not None
    assert sum(p for row in inst.probs for p in row if p is not None) == 1


def test_confusion_graph_definition():
    """x and x' are confusable iff some commonly supported y separates f."""
    rng = random.Random(11)
    for _ in range(60):
        inst = random_instance(rng, rng.randint(2, 5), rng.randint(2, 4))
        g = build_confusion_graph(inst)
        assert g.labels == inst.x_labels
        for a in range(inst.nx):
            for b in range(a + 1, inst.nx):
                expect = any(
                    inst.supported(a, y)
                    and inst.supported(b, y)
                    and inst.values[a][y] != inst.values[b][y]
                    for y in range(inst.ny)
                )
                assert g.has_edge(a, b) == expect


def test_builtin_confusion_graphs_are_pentagons():
    pent = named_graph("pentagon")
    for name in ("f_tilde", "g_tilde", "h_tilde"):
        assert build_confusion_graph(builtin_instance(name)) == pent
    peq = builtin_instance("pentagon_equality")
    g = build_confusion_graph(peq)
    assert g.n == 5 and g.edge_count == 5


def test_m_instance_graph_matches_brute_force():
    rng = random.Random(12)
    for _ in range(25):
        inst = random_instance(rng, rng.randint(2, 4), rng.randint(2, 3))
        for m in (2, 3):
            assert build_m_instance_graph(inst, m) == brute_m_instance_graph(inst, m)
    assert build_m_instance_graph(inst, 1) == build_confusion_graph(inst)
    with pytest.raises(InputError):
        build_m_instance_graph(inst, 0)
    with pytest.raises(SizeExceeded):
        build_m_instance_graph(builtin_instance("f_tilde"), 9)


def test_nonedge_classification_builtin_cases():
    assert classify_nonedges(builtin_instance("f_tilde")).all_c1
    assert classify_nonedges(builtin_instance("g_tilde")).all_c2
    h = classify_nonedges(builtin_instance("h_tilde"))
    assert h.c1_pairs and h.c2_pairs
    assert predict_product_collapse(builtin_instance("f_tilde")) is Collapse.ALL_STRONG
    assert predict_product_collapse(builtin_instance("g_tilde")) is Collapse.ALL_OR
    assert predict_product_collapse(builtin_instance("h_tilde")) is Collapse.BETWEEN


def test_collapse_prediction_matches_observed_powers():
    """Predicted collapse agrees with the m=2 block graph, both directions."""
    rng = random.Random(13)
    seen = set()
    for _ in range(120):
        inst = random_instance(rng, rng.randint(2, 4), rng.randint(2, 4))
        g = build_confusion_graph(inst)
        g2 = build_m_instance_graph(inst, 2)
        strong2 = power(g, 2, "strong")
        or2 = power(g, 2, "or")
        verdict = predict_product_collapse(inst)
        seen.add(verdict)
        # sandwich holds regardless of the verdict
        for a, b in strong2.edges():
            assert g2.has_edge(a, b)
        for a, b in g2.edges():
            assert or2.has_edge(a, b)
        if verdict is Collapse.TRIVIAL:
            assert strong2 == or2 == g2
        elif verdict is Collapse.ALL_STRONG:
            assert g2 == strong2
        elif verdict is Collapse.ALL_OR:
            assert g2 == or2
        else:
            assert g2 != strong2 and g2 != or2
    assert Collapse.BETWEEN in seen and Collapse.ALL_STRONG in seen


def test_constructors_realize_target_graph():
    rng = random.Random(14)
    for _ in range(40):
        g = random_graph_no_isolated(rng, rng.randint(2, 6))
        strong = construct_strong_instance(g)
        assert build_confusion_graph(strong) == g
        assert classify_nonedges(strong).all_c1
        orr = construct_or_instance(g)
        assert build_confusion_graph(orr) == g
        assert classify_nonedges(orr).all_c2


def test_strong_constructor_needs_incident_edges():
    g = named_graph("empty(3)")
    with pytest.raises(IsolatedVertex):
        construct_strong_instance(g)
    # the OR constructor tolerates isolated vertices
    inst = construct_or_instance(g)
    assert build_confusion_graph(inst) == g


def test_or_constructor_collapse_is_or_even_on_pentagon_complement():
    g = complement(named_graph("pentagon"))
    inst = construct_or_instance(g)
    assert predict_product_collapse(inst) is Collapse.ALL_OR
    assert build_m_instance_graph(inst, 2) == power(g, 2, "or")


def test_instance_json_round_trip():
    rng = random.Random(15)
    for _ in range(20):
        inst = random_instance(rng, rng.randint(2, 4), rng.randint(2, 4))
        data = json.loads(json.dumps(instance_to_json_dict(inst)))
        assert instance_from_json_dict(data) == inst
    inst = with_uniform_probs(builtin_instance("h_tilde"))
    data = json.loads(json.dumps(instance_to_json_dict(inst)))
    assert instance_from_json_dict(data) == inst


def test_builtin_instance_rejects_unknown():
    with pytest.raises(InputError):
        builtin_instance("nope")
