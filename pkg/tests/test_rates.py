"""Rate intervals, advantage verdicts, casebook, classification table."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from zerorate.errors import InputError, InvalidCertificate
from zerorate.graphs import named_graph
from zerorate.instances import builtin_instance, construct_or_instance
from zerorate.rates import (
    CASE_NAMES,
    FamilyReport,
    RateReport,
    advantage_report,
    casebook,
    classical_rate_bounds,
    classification_table,
    quantum_rate_bounds,
)
from zerorate.reps import OrthRep, builtin_representation

HALF_LOG5 = math.log2(5) / 2
LOG_5_HALVES = math.log2(2.5)
LOG3 = math.log2(3)


def _assert_interval(iv):
    assert iv.lo.value <= iv.hi.value + 1e-12


def test_casebook_names_cover_reference_cases():
    for name in CASE_NAMES:
        assert isinstance(name, str)
    assert set(CASE_NAMES) >= {"c5_strong", "c5_or", "g13_or"}


def test_c5_strong_rates_collapse_to_half_log5():
    r = casebook("c5_strong", budget_seconds=60.0)
    assert isinstance(r, RateReport)
    assert r.collapse == "AllStrong"
    for iv in (r.classical_asymptotic, r.quantum_asymptotic):
        assert abs(iv.lo.value - HALF_LOG5) <= 1e-6
        assert abs(iv.hi.value - HALF_LOG5) <= 1e-6
        assert iv.width <= 1e-6
    assert r.advantage_single == "no"
    assert r.advantage_asymptotic == "no"
    assert 2 in r.m_values


def test_c5_or_rates_collapse_to_log_5_halves():
    r = casebook("c5_or", budget_seconds=60.0)
    assert r.collapse == "AllOr"
    for iv in (r.classical_asymptotic, r.quantum_asymptotic):
        assert abs(iv.lo.value - LOG_5_HALVES) <= 1e-6
        assert iv.width <= 1e-6
    assert r.advantage_single == "no"
    assert r.advantage_asymptotic == "no"
    assert any("coincide" in n for n in r.notes)


def test_c5_between_is_undetermined_asymptotically():
    r = casebook("c5_between", budget_seconds=60.0)
    assert r.collapse == "Between"
    assert r.advantage_single == "no"
    assert r.advantage_asymptotic == "undetermined"
    _assert_interval(r.classical_asymptotic)
    _assert_interval(r.quantum_asymptotic)
    # the asymptotic rate is caught between the two collapsed cases
    assert r.classical_asymptotic.lo.value <= LOG_5_HALVES + 1e-9
    assert r.classical_asymptotic.hi.value >= HALF_LOG5 - 1e-9


def test_g13_or_has_advantage_in_both_senses():
    r = casebook("g13_or", budget_seconds=120.0)
    assert r.advantage_single == "yes"
    assert r.advantage_asymptotic == "yes"
    assert abs(r.quantum_single.hi.value - LOG3) <= 1e-9
    assert r.classical_asymptotic.lo.value >= math.log2(35 / 11) - 1e-9
    assert r.quantum_asymptotic.hi.value < r.classical_asymptotic.lo.value
    assert any("beats every classical block protocol" in n for n in r.notes)


def test_ldg13_cases_have_single_but_not_asymptotic_advantage():
    for name in ("ldg13_strong", "ldg13_or"):
        r = casebook(name, budget_seconds=120.0)
        assert r.advantage_single == "yes", name
        assert r.advantage_asymptotic == "no", name
        assert abs(r.quantum_single.hi.value - LOG3) <= 1e-9
        assert r.classical_single.lo.value >= 2 - 1e-9  # chromatic number is 4


def test_casebook_rejects_unknown_name():
    with pytest.raises(InputError):
        casebook("c7_strong")


def test_family_report_h7():
    r = casebook("hn(7)", budget_seconds=60.0)
    assert isinstance(r, FamilyReport)
    assert r.vertices == 64 and r.edges == 1120
    assert r.certificate_dim == 8 and r.certificate_valid
    assert abs(r.certificate_rate_bits - 3.0) <= 1e-12
    assert r.advantage_single == "undetermined"
    assert r.advantage_asymptotic == "undetermined"
    assert any("0.154" in n for n in r.notes)
    assert any("43" in n for n in r.notes)


def test_family_report_degenerate_size():
    r = casebook("hn(5)", budget_seconds=60.0)
    assert r.edges == 0
    assert any("impossible" in n for n in r.notes)


def test_rate_bound_wrappers():
    inst = builtin_instance("f_tilde")
    c = classical_rate_bounds(inst, m_max=2, budget_seconds=60.0)
    q = quantum_rate_bounds(
        inst, m_max=2, certificates=(builtin_representation("c5bar"),), budget_seconds=60.0
    )
    _assert_interval(c)
    _assert_interval(q)
    assert q.hi.value <= c.hi.value + 1e-12
    assert abs(c.lo.value - HALF_LOG5) <= 1e-6


def test_advantage_report_on_custom_instance():
    inst = construct_or_instance(named_graph("complete(3)"))
    r = advantage_report(inst, name="triangle", m_max=2, budget_seconds=30.0)
    assert r.name == "triangle"
    # complete confusion graph: both rates are exactly log2 3
    assert abs(r.classical_asymptotic.lo.value - LOG3) <= 1e-6
    assert abs(r.quantum_asymptotic.hi.value - LOG3) <= 1e-6
    assert r.advantage_asymptotic == "no"


def test_advantage_report_rejects_bad_certificate():
    inst = builtin_instance("f_tilde")
    good = builtin_representation("c5bar")
    bad = OrthRep(good.target, good.dim, good.mode, (good.vectors[1],) + good.vectors[1:])
    with pytest.raises(InvalidCertificate):
        advantage_report(inst, certificates=(bad,), budget_seconds=30.0)
    with pytest.raises(InvalidCertificate):
        advantage_report(inst, certificates=(builtin_representation("g13bar"),))


def test_intervals_nest_as_m_grows():
    inst = builtin_instance("f_tilde")
    c1 = classical_rate_bounds(inst, m_max=1, budget_seconds=30.0)
    c2 = classical_rate_bounds(inst, m_max=2, budget_seconds=30.0)
    assert c2.hi.value <= c1.hi.value + 1e-12
    assert c2.lo.value >= c1.lo.value - 1e-12


def test_classification_table_matches_reference():
    table = classification_table(budget_seconds=120.0)
    assert table.all_agree
    assert len(table.rows) == 5
    for row in table.rows:
        assert row.computed_single == row.reference_single
        assert row.computed_asymptotic == row.reference_asymptotic
    assert "no case known" in table.markdown
    assert table.markdown.count("|") > 20
