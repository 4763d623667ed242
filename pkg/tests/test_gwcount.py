import random

import pytest

from twoquadrics.gwcount import (
    REASON_L_BOUND,
    REASON_UNSTABLE,
    REASON_ZERO_INSERTION,
    DegenerationTerm,
    RelativeProblem,
    _partitions,
    degree_budget,
    enumerate_terms,
    l_bound,
    main_correlator_report,
    quadric_component_geometry,
    screen_results,
    screens_agree,
    vanishing_check,
    virdim_relative,
)


def test_virdim_examples():
    g4 = quadric_component_geometry(4)
    assert virdim_relative(RelativeProblem(0, 1, 1, (1,)), g4) == 5
    assert virdim_relative(RelativeProblem(1, 0, 0, ()), g4) == 2
    g6 = quadric_component_geometry(6)
    assert virdim_relative(RelativeProblem(1, 2, 2, (1, 1)), g6) == 16
    # independent re-derivation: m - 3 + (m-1)*beta + n + l
    m, beta, n, l = 6, 2, 1, 2
    assert m - 3 + (m - 1) * beta + n + l == 16


def test_virdim_linear_in_each_argument():
    rng = random.Random(2)
    for _ in range(50):
        m = rng.choice((4, 6, 8))
        geom = quadric_component_geometry(m)
        beta = rng.randint(1, 4)
        n, l = rng.randint(0, 4), rng.randint(1, beta)
        mu = tuple([beta - l + 1] + [1] * (l - 1))
        base = virdim_relative(RelativeProblem(n, l, beta, mu), geom)
        # one more interior marking adds exactly one
        assert virdim_relative(RelativeProblem(n + 1, l, beta, mu), geom) == base + 1
        # one more divisor marking (with a unit multiplicity carved off)
        if mu[0] > 1:
            split = (mu[0] - 1,) + mu[1:] + (1,)
            assert (
                virdim_relative(RelativeProblem(n, l + 1, beta, split), geom)
                == base + 1
            )
        # one more unit of curve class on a single marking adds m-1
        heavier = (mu[0] + 1,) + mu[1:]
        assert (
            virdim_relative(RelativeProblem(n, l, beta + 1, heavier), geom)
            == base + (m - 1)
        )


def test_relative_problem_validation():
    with pytest.raises(ValueError):
        RelativeProblem(0, 1, 2, (1,))  # multiplicities must sum to beta
    with pytest.raises(ValueError):
        RelativeProblem(0, 2, 2, (2,))  # one multiplicity per marking
    with pytest.raises(ValueError):
        RelativeProblem(0, 1, 0, (0,))  # multiplicities positive


def test_degree_budget():
    assert degree_budget(DegenerationTerm(4, (), 1, 1, (1,), (1,))) == 1
    assert degree_budget(DegenerationTerm(4, (6,), 0, 0, (), ())) == 2
    assert degree_budget(DegenerationTerm(4, (6,), 2, 2, (1, 1), (3, 3))) == 8


def test_partitions_helper():
    assert list(_partitions(0, 0)) == [()]
    assert list(_partitions(3, 0)) == []
    assert list(_partitions(3, 2)) == [(2, 1)]
    assert list(_partitions(5, 3)) == [(3, 1, 1), (2, 2, 1)]
    assert all(sum(p) == 6 and len(p) == 2 for p in _partitions(6, 2))


def test_enumeration_census_dimension_four():
    terms = enumerate_terms(4)
    assert len(terms) == 152
    census = {}
    for t in terms:
        v = vanishing_check(t)
        census[v.reason] = census.get(v.reason, 0) + 1
    assert census == {
        REASON_ZERO_INSERTION: 126,
        REASON_L_BOUND: 24,
        REASON_UNSTABLE: 2,
    }


def test_high_insertion_counts_die_at_enumeration():
    for t in enumerate_terms(4):
        if t.n1 >= 2:
            assert t.immediate_verdict is not None
            assert t.immediate_verdict.reason == REASON_ZERO_INSERTION


def test_wrong_single_insertion_dies():
    terms = enumerate_terms(4)
    wrong = [t for t in terms if t.x1_insertions == (1,)]
    assert wrong and all(
        vanishing_check(t).reason == REASON_ZERO_INSERTION for t in wrong
    )


def test_l_bound_values():
    assert l_bound(0, 4) == -1
    assert l_bound(1, 4) == 0
    assert l_bound(0, 2) == 1
    assert l_bound(2, 4) is None


def test_tangency_bound_kills_positive_l():
    term = DegenerationTerm(4, (), 1, 1, (1,), (3,))
    verdict = vanishing_check(term)
    assert verdict.vanishes and verdict.reason == REASON_L_BOUND
    # the same configuration also fails the exact dimension equation
    passes_bound, dim_ok = screen_results(term)
    assert passes_bound is False and dim_ok is False


def test_stability_is_what_kills_the_marked_degree_zero_term():
    # one interior marking, degree zero: the dimension equation holds at
    # m = 4 (both sides equal 2), so only stability rules it out
    term = DegenerationTerm(4, (6,), 0, 0, (), ())
    passes_bound, dim_ok = screen_results(term)
    assert passes_bound is True and dim_ok is True
    verdict = vanishing_check(term)
    assert verdict.vanishes and verdict.reason == REASON_UNSTABLE


def test_empty_configuration_is_unstable():
    term = DegenerationTerm(4, (), 0, 0, (), ())
    verdict = vanishing_check(term)
    assert verdict.reason == REASON_UNSTABLE
    _, dim_ok = screen_results(term)
    assert dim_ok is False  # virtual dimension 1 against budget 0


def test_dimension_mismatch_reason_reachable():
    term = DegenerationTerm(2, (), 1, 1, (1,), (1,))
    # m=2: bound allows l=1 and the equation balances: survives
    assert not vanishing_check(term).vanishes
    bigger = DegenerationTerm(2, (4,), 0, 0, (), ())
    passes_bound, dim_ok = screen_results(bigger)
    assert passes_bound is True and dim_ok is False


def test_screens_agree_for_main_range():
    for m in (4, 6, 8, 10):
        assert screens_agree(enumerate_terms(m))


def test_main_reports_vanish():
    for m in (4, 6, 8, 10):
        report = main_correlator_report(m)
        assert report["status"] == "vanishes"
        assert report["correlator_value"] == 0
        assert report["surviving_terms"] == []
        assert report["screens_consistent"]
        assert sum(report["verdict_census"].values()) == report["total_terms"]


def test_largest_desk_scale_dimension_vanishes():
    report = main_correlator_report(12)
    assert report["status"] == "vanishes" and not report["surviving_terms"]
    assert report["screens_consistent"]


def test_surface_case_is_inconclusive():
    report = main_correlator_report(2)
    assert report["status"] == "inconclusive"
    assert report["correlator_value"] is None
    survivors = report["surviving_terms"]
    assert len(survivors) == 2
    assert {tuple(s["x1_insertions"]) for s in survivors} == {(), (4,)}
    assert all(s["beta1"] == 1 and s["l"] == 1 for s in survivors)


def test_odd_dimension_rejected():
    with pytest.raises(ValueError):
        main_correlator_report(5)
    with pytest.raises(ValueError):
        enumerate_terms(3)


def test_insertion_filter_is_load_bearing():
    filtered = enumerate_terms(4)
    unfiltered = enumerate_terms(4, filter_insertions=False)
    assert len(unfiltered) > len(filtered)
    survivors = [t for t in unfiltered if not vanishing_check(t).vanishes]
    # the dimension and tangency screens alone cannot close the argument:
    # without the restriction filter, balanced terms with several
    # quadric-side insertions survive, and every one of them carries an
    # insertion that restricts to zero
    assert survivors
    assert all(t.n1 >= 2 for t in survivors)
    assert all(any(i != 6 for i in t.x1_insertions) for t in survivors)


def test_report_notes_present():
    report = main_correlator_report(4)
    assert any("half-degrees" in note for note in report["notes"])
    assert any("never evaluated" in note for note in report["notes"])
