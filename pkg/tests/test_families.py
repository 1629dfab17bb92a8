from fractions import Fraction

import pytest

from hypercycles.families import (
    CaseIPattern,
    PatternNotAchieved,
    construct,
    construct_case_i,
    construct_case_ii,
    construct_high_n,
    construct_n_2m,
    lift,
    perturb_lemma7,
    perturb_lemma8,
)
from hypercycles.lienard import bounds, invariance_check
from hypercycles.polyx import X, parse_poly
from hypercycles.rootclass import isolate_real_roots, sign_on_interval


def _certified_pairs(report):
    return [(v.s1, v.s2) for v in report.intervals if v.certified]


def test_high_n_25():
    res = construct_high_n(2, 5)
    assert res.report.certified_count == 1
    [(s1, s2)] = _certified_pairs(res.report)
    assert s1.equals_rational(1) and s2.equals_rational(2)
    assert invariance_check(res.system, res.curve)


def test_high_n_37_interval():
    res = construct_high_n(3, 7)
    assert res.report.certified_count == 1
    [(s1, s2)] = _certified_pairs(res.report)
    assert s1.equals_rational(2) and s2.equals_rational(3)  # m odd branch


def test_high_n_49_intervals():
    res = construct_high_n(4, 9)
    pairs = _certified_pairs(res.report)
    assert [(1, 2), (3, 4)] == [
        (int(p.value), int(q.value)) for p, q in pairs
    ]


def test_high_n_rejects_bad_type():
    with pytest.raises(ValueError):
        construct_high_n(2, 4)


def test_n_2m_counts():
    assert construct_n_2m(5).report.certified_count == 2
    assert construct_n_2m(4).report.certified_count == 1


def test_n_2m_m3_warns_in_parameters():
    res = construct_n_2m(3)
    assert res.report.certified_count == 1
    assert "warning" in res.parameters


def test_lemma7_base_case():
    c, perturbed = perturb_lemma7(0, 1, 3)
    assert c.degree == 0 and c[0] > 0
    roots = isolate_real_roots(perturbed)
    assert len(roots) == perturbed.degree  # all real simple
    assert sign_on_interval(c, 0, 3) == "positive"


def test_lemma7_inductive_step():
    c, perturbed = perturb_lemma7(1, 0, 5)
    assert c.degree == 2
    assert sign_on_interval(c, 0, 5) == "positive"
    roots = isolate_real_roots(perturbed)
    assert len(roots) == perturbed.degree == 4


def test_lemma7_positivity_postcondition():
    for h, l, s in ((0, 1, 3), (0, 2, 4), (1, 0, 5), (1, 1, 6)):
        c, _ = perturb_lemma7(h, l, s)
        assert sign_on_interval(c, 0, s) == "positive"
        assert c.degree == 2 * h


def test_lemma8_base_and_ladders():
    for h, l, s1, s2 in ((1, 0, -2, 3), (1, 1, -2, 4)):
        c, perturbed = perturb_lemma8(h, l, s1, s2)
        assert c.degree == 2 * h - 1
        assert sign_on_interval(c, s1, s2) == "positive"
        roots = isolate_real_roots(perturbed)
        assert len(roots) == perturbed.degree
        # ladder: first root in (s1, 0), exactly one root below 0 after it
        assert roots[0].sign_of(X) == -1 and roots[1].sign_of(X) == -1
        assert roots[2].sign_of(X) == 1


def test_lemma8_rejects_bad_window():
    with pytest.raises(ValueError):
        perturb_lemma8(1, 0, 0, 3)  # s1 must be < -1
    with pytest.raises(ValueError):
        perturb_lemma8(0, 0, -2, 3)  # h >= 1


def test_case_i_46():
    res = construct_case_i(4, 6)
    assert res.report.certified_count == 1
    assert res.system.type == (4, 6)
    b = bounds(4, 6)
    assert b.exact and res.report.certified_count == b.upper


def test_case_i_1013():
    res = construct_case_i(10, 13)
    assert res.report.certified_count == 2
    assert res.system.type == (10, 13)
    assert res.parameters["t"] == 2


def test_case_i_out_of_band():
    with pytest.raises(ValueError):
        construct_case_i(4, 9)


def test_case_i_infeasible_pattern_reports():
    # a pattern whose seed lists cannot produce the ladder
    pattern = CaseIPattern(
        x0_candidates=(Fraction(0),),
        odd_nodes=(Fraction(1, 2),),   # a single node: no t=2 seed pairs
        even_nodes=(Fraction(1, 4),),
        max_seeds=4,
    )
    with pytest.raises(PatternNotAchieved):
        construct_case_i(10, 13, pattern=pattern)


def test_case_ii_ii_i_path():
    res = construct_case_ii(5, 9)
    assert res.report.certified_count == 2
    assert res.system.type == (5, 9)


def test_case_ii_reduction_path():
    res = construct_case_ii(6, 11)
    assert res.report.certified_count == 2
    assert res.system.type == (6, 11)
    assert res.parameters["reduced_from"] == (5, 9)


def test_case_ii_rejects_excluded_cells():
    with pytest.raises(ValueError):
        construct_case_ii(3, 5)


def test_case_ii_47_dead_end_is_reported():
    # the reduction (4,7) -> (3,5) lands on the excluded zero cell
    with pytest.raises(PatternNotAchieved):
        construct_case_ii(4, 7)


def test_lift_preserves_cycles():
    base = construct_high_n(2, 5)
    lifted = lift(base.curve)
    assert lifted.system.type == (3, 7)
    assert lifted.report.certified_count >= 1
    again = lift(lifted.curve)
    assert again.system.type == (4, 9)
    assert again.report.certified_count >= 1


def test_lift_degree_contract():
    base = construct_high_n(2, 5)
    lifted = lift(base.curve)
    assert lifted.curve.P.degree == base.curve.P.degree + 1
    assert lifted.curve.Q.degree == base.curve.Q.degree + 2


def test_lift_requires_certified_base():
    # a valid curve with zero certified cycles cannot be lifted
    R = parse_poly("(x-1)(x-2)")
    curve_P = R * parse_poly("x+10")
    curve_Q = (R * parse_poly("(x+10)^4")).scale(10)  # wrong sign: 0 cycles
    from hypercycles.lienard import HyperellipticCurve

    with pytest.raises(ValueError):
        lift(HyperellipticCurve(P=curve_P, Q=curve_Q))


def test_construct_dispatcher():
    assert construct(2, 5).system.type == (2, 5)
    assert construct(4, 8).system.type == (4, 8)
    assert construct(4, 6).system.type == (4, 6)
    assert construct(5, 9).system.type == (5, 9)
    with pytest.raises(ValueError):
        construct(2, 4)
    with pytest.raises(ValueError):
        construct(1, 7)


def test_constructions_match_lower_bounds():
    for m, n in ((2, 5), (4, 6), (4, 8), (5, 9)):
        res = construct(m, n)
        assert res.report.certified_count == bounds(m, n).lower
        assert res.report.bound_consistent


def test_certified_endpoints_are_simple_roots():
    for res in (construct_high_n(2, 5), construct_n_2m(4), construct_case_i(4, 6)):
        for v in res.report.intervals:
            if v.certified:
                assert v.s1.multiplicity == 1 and v.s2.multiplicity == 1


def test_focus_node_sign_data_on_certified_intervals():
    # at the interior critical point of Q the derived g must be increasing
    for res in (construct_high_n(3, 7), construct_n_2m(5), construct_case_i(10, 13)):
        certified = [v for v in res.report.intervals if v.certified]
        assert certified
        assert all(v.gprime_positive_at_alpha is True for v in certified)


def test_case_i_79_needs_more_conditions_than_nodes():
    # (7,9) asks for t = 2 exact double roots but offers only deg M = 2 free
    # node coefficients; the rational seed families cannot meet the 3
    # alignment conditions, and the failure is reported, not papered over
    with pytest.raises(PatternNotAchieved):
        construct_case_i(7, 9)
