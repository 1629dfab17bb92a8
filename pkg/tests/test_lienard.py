from fractions import Fraction

import pytest

from hypercycles.lienard import (
    HyperellipticCurve,
    LienardSystem,
    NonPolynomialSystem,
    bounds,
    certify,
    cofactor,
    derive_system,
    invariance_check,
    invariance_residual,
)
from hypercycles.polyx import ONE, Poly, X, parse_poly, squarefree_part


def P(*coeffs):
    return Poly(coeffs)


def worked_25_curve():
    """P = (x-1)(x-2)(x+10), Q = -10 (x-1)(x-2)(x+10)^4."""
    R = parse_poly("(x-1)(x-2)")
    Pp = R * parse_poly("x+10")
    Q = (R * parse_poly("(x+10)^4")).scale(-10)
    return HyperellipticCurve(P=Pp, Q=Q)


def test_derive_worked_25():
    curve = worked_25_curve()
    sys = derive_system(curve)
    assert sys.type == (2, 5)
    # f = P' + (R'(x+10) + 4R)/2 with R = (x-1)(x-2)
    R = parse_poly("(x-1)(x-2)")
    expected_f = curve.P.derivative() + (R.derivative() * parse_poly("x+10") + R.scale(4)).scale(
        Fraction(1, 2)
    )
    assert sys.f == expected_f


def test_derive_degenerate_p2_equals_q():
    with pytest.raises(NonPolynomialSystem):
        derive_system(HyperellipticCurve(P=X, Q=X * X))  # g = 0


def test_derive_constant_q():
    with pytest.raises(NonPolynomialSystem):
        derive_system(HyperellipticCurve(P=P(0, 0, 1), Q=P(3)))  # Q' = 0


def test_derive_divisibility_failure():
    with pytest.raises(NonPolynomialSystem):
        derive_system(HyperellipticCurve(P=P(1, 1), Q=P(0, 0, 1, 1)))


def test_cofactor_worked_25():
    curve = worked_25_curve()
    K = cofactor(curve).K
    # K = -P Q'/Q exactly: independently check K*Q == -P*Q'
    assert K * curve.Q == -(curve.P * curve.Q.derivative())
    # closed form: -(R'(x+10) + 4R) with R = (x-1)(x-2)
    R = parse_poly("(x-1)(x-2)")
    assert K == -(R.derivative() * parse_poly("x+10") + R.scale(4))
    assert K.degree == 2


def test_cofactor_zero_when_q_prime_zero():
    # Q constant: K = -P*0/Q = 0
    curve = HyperellipticCurve(P=P(0, 1), Q=P(4))
    assert cofactor(curve).K.is_zero()


def test_invariance_worked_25():
    curve = worked_25_curve()
    sys = derive_system(curve)
    assert invariance_check(sys, curve)
    residual = invariance_residual(sys, curve)
    assert residual.is_zero()


def test_invariance_fails_for_perturbed_g():
    curve = worked_25_curve()
    sys = derive_system(curve)
    bad = LienardSystem(f=sys.f, g=sys.g + ONE)
    assert not invariance_check(bad, curve)


def test_certify_worked_25():
    report = certify(worked_25_curve())
    assert report.all_roots_real
    assert report.certified_count == 1
    [win] = [v for v in report.intervals if v.certified]
    assert win.s1.equals_rational(1) and win.s2.equals_rational(2)
    assert win.critical_point_unique
    assert win.gprime_positive_at_alpha is True
    assert report.bound_consistent
    b = report.bounds
    assert (b.lower, b.upper) == (1, None)  # n = 2m+1: no finite upper bound


def test_certify_no_simple_roots():
    # P^2 = Q makes g vanish identically: not a Lienard system at all
    with pytest.raises(NonPolynomialSystem):
        certify(HyperellipticCurve(P=P(0, 0, 1), Q=P(0, 0, 0, 0, 1)))
    # a curve whose Q has only multiple roots: derives fine, zero candidates
    Pp = parse_poly("(x-1)(x-2)(x+6)")
    Q = (parse_poly("(x-1)(x-2)") ** 2 * parse_poly("(x+6)^4")).scale(-6)
    report = certify(HyperellipticCurve(P=Pp, Q=Q))
    assert report.certified_count == 0
    assert report.intervals == []


def test_certify_sign_screen_rejects():
    # same shape as the worked curve but positive leading constant flips Q's
    # sign between the simple roots: no certified cycles
    R = parse_poly("(x-1)(x-2)")
    Pp = R * parse_poly("x+10")
    Q = (R * parse_poly("(x+10)^4")).scale(10)
    report = certify(HyperellipticCurve(P=Pp, Q=Q))
    assert report.certified_count == 0


def test_root_containment_invariant():
    curve = worked_25_curve()
    derive_system(curve)
    # every root of Q is a root of P
    assert squarefree_part(curve.Q).divides(curve.P)


def test_degree_contract():
    curve = worked_25_curve()
    sys = derive_system(curve)
    assert curve.P.degree == sys.m + 1
    assert (curve.P * curve.P - curve.Q).degree == sys.n + 1


# -- bounds -------------------------------------------------------------------


def test_bounds_examples_from_remark():
    b = bounds(3, 8)  # n > 2m+1
    assert (b.lower, b.upper, b.exact) == (1, 1, True)
    b = bounds(4, 7)  # n = 2m-1, m >= 4
    assert (b.lower, b.upper, b.exact) == (1, 1, True)
    b = bounds(10, 13)
    assert (b.lower, b.upper, b.exact) == (2, 3, False)


def test_bounds_zero_region():
    assert bounds(0, 5).upper == 0
    assert bounds(1, 9).upper == 0
    assert bounds(5, 5).upper == 0      # n <= m (genericity note)
    assert "gener" in bounds(5, 5).note
    assert bounds(4, 5).upper == 0      # n = m+1
    assert bounds(2, 4).upper == 0
    assert bounds(3, 5).upper == 0


def test_bounds_n_2m_plus_1_unbounded():
    b = bounds(4, 9)
    assert b.lower == 2 and b.upper is None and not b.exact


def test_bounds_band_1():
    b = bounds(4, 6)
    assert (b.lower, b.upper, b.exact) == (1, 1, True)
    b = bounds(5, 7)
    assert (b.lower, b.upper) == (1, 2)


def test_bounds_survey_gap_cell():
    b = bounds(3, 6)
    assert b.lower == 1 and b.upper is None


def test_bounds_rejects_bad_args():
    with pytest.raises(ValueError):
        bounds(-1, 3)
    with pytest.raises(ValueError):
        bounds(2, 0)


def test_cofactor_degenerate_q_equals_p_squared():
    # Q = P^2: the cofactor division succeeds whenever P | Q', even though
    # the derived system itself is rejected (g vanishes)
    curve = HyperellipticCurve(P=P(0, 0, 1), Q=P(0, 0, 0, 0, 1))
    assert cofactor(curve).K == P(0, -4)
    with pytest.raises(NonPolynomialSystem):
        derive_system(curve)
