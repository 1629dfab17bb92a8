import random
from fractions import Fraction

import pytest

from hypercycles.polyx import ONE, Poly, X, squarefree_part
from hypercycles.rootclass import (
    EndpointRootError,
    cauchy_bound,
    count_roots,
    discriminant_sequence,
    discrimination_matrix,
    hankel_minor,
    isolate_real_roots,
    power_sums,
    revised_sign_list,
    sign_list,
    sign_on_interval,
    simplest_in_interval,
    sturm_count,
)


def P(*coeffs):
    return Poly(coeffs)


def _naive_det(rows):
    """Cofactor-expansion determinant; independent oracle for minor tests."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * _naive_det(minor)
    return total


# -- discrimination matrix ---------------------------------------------------


def test_matrix_layout_quadratic():
    b, c = Fraction(3), Fraction(5)
    m = discrimination_matrix(P(c, b, 1))  # x^2 + bx + c
    assert m == [
        [1, b, c, 0],
        [0, 2, b, 0],
        [0, 1, b, c],
        [0, 0, 2, b],
    ]


def test_matrix_dimensions():
    m = discrimination_matrix(P(1, 0, 0, 0, 0, 2))  # degree 5
    assert len(m) == 10 and all(len(r) == 10 for r in m)


def test_d1_is_degree_for_monic():
    for p in [P(4, -2, 1), P(1, 2, 3, 1), P(-1, 0, 0, 0, 1)]:
        ds = discriminant_sequence(p)
        assert ds[0] == p.degree


def test_minors_match_naive_determinants():
    rng = random.Random(3)
    for _ in range(10):
        p = Poly([Fraction(rng.randint(-5, 5)) for _ in range(4)] + [1])
        m = discrimination_matrix(p)
        ds = discriminant_sequence(p)
        for k in range(1, p.degree + 1):
            sub = [row[: 2 * k] for row in m[: 2 * k]]
            assert ds[k - 1] == _naive_det(sub)


def test_d2_signs():
    # frozen from 4x4 cofactor expansions done by hand
    assert discriminant_sequence(P(1, 0, 1)) == [2, -4]   # x^2+1: conjugate pair
    assert discriminant_sequence(P(-1, 0, 1)) == [2, 4]   # x^2-1: two real roots
    assert discriminant_sequence(P(-1, 1) ** 2)[1] == 0   # repeated root


# -- sign lists ---------------------------------------------------------------


def test_revised_sign_list_no_zeros():
    assert revised_sign_list([1, 1, -1]) == [1, 1, -1]


def test_revised_sign_list_interior_run():
    # Definition-4 pattern for a run of three zeros after +1
    assert revised_sign_list([1, 0, 0, 0, 1]) == [1, -1, -1, 1, 1]


def test_revised_sign_list_trailing_zeros_untouched():
    assert revised_sign_list([1, 0, 0]) == [1, 0, 0]


def test_revised_idempotent_without_interior_runs():
    for s in ([1, -1, 1], [1, 1, 0], [-1, 0, 0], [1]):
        assert revised_sign_list(s) == s


# -- counting ------------------------------------------------------------------


def test_count_roots_examples():
    assert count_roots(P(1, 0, 1)) == count_roots(P(1, 0, 1)).__class__(0, 1)
    rc = count_roots(P(1, 0, 1))
    assert (rc.distinct_real, rc.imaginary_pairs) == (0, 1)
    rc = count_roots(P(0, -1, 0, 1))  # x^3 - x
    assert (rc.distinct_real, rc.imaginary_pairs) == (3, 0)
    rc = count_roots(P(-1, 1) ** 2 * P(2, 1))
    assert (rc.distinct_real, rc.imaginary_pairs) == (2, 0)


def test_power_sums_examples():
    assert power_sums(P(-1, 0, 1), 2) == [2, 0, 2]
    s = power_sums(P(-1, 1) * P(-2, 1), 2)
    assert s[1] == 3 and s[2] == 5
    assert power_sums(P(0, 0, 0, 1), 3) == [3, 0, 0, 0]


def test_hankel_identity_on_quadratics():
    # lemma-style check: D_k equals the Hankel minor of power sums (monic f)
    for p in [P(1, 0, 1), P(-1, 0, 1), P(-2, 3, 1)]:
        sums = power_sums(p, 2 * p.degree - 2 if p.degree > 1 else 2)
        ds = discriminant_sequence(p)
        for k in range(1, p.degree + 1):
            assert ds[k - 1] == hankel_minor(sums, k)


# -- Sturm ---------------------------------------------------------------------


def test_sturm_count_examples():
    assert sturm_count(P(-2, 0, 1), 0, 2) == 1
    assert sturm_count(P(1, 0, 1), -10, 10) == 0
    p = P(-1, 1) * P(-2, 1) * P(-3, 1)
    assert sturm_count(p, Fraction(3, 2), Fraction(7, 2)) == 2
    with pytest.raises(EndpointRootError):
        sturm_count(p, 1, 4)


def test_sturm_handles_repeated_roots():
    p = P(-1, 1) ** 3 * P(-2, 1)
    assert sturm_count(p, 0, 3) == 2  # distinct roots only


# -- isolation -------------------------------------------------------------------


def test_isolate_sqrt2():
    roots = isolate_real_roots(P(-2, 0, 1))
    assert len(roots) == 2
    assert all(r.multiplicity == 1 for r in roots)
    assert roots[0].hi < roots[1].lo
    neg, pos = roots
    # each interval must bracket its root of x^2 - 2
    assert neg.lo**2 > 2 > neg.hi**2 and neg.hi < 0
    assert pos.lo**2 < 2 < pos.hi**2 and pos.lo > 0


def test_isolate_exact_rational_roots():
    roots = isolate_real_roots(P(-1, 1) ** 2 * P(-3, 1))
    assert [(r.is_exact(), r.multiplicity) for r in roots] == [(True, 2), (True, 1)]
    assert roots[0].value == 1 and roots[1].value == 3


def test_isolate_no_real_roots():
    assert isolate_real_roots(P(1, 0, 1)) == []


def test_isolate_counts_match_classifier():
    rng = random.Random(5)
    for _ in range(40):
        deg = rng.randint(2, 6)
        p = Poly([Fraction(rng.randint(-8, 8), rng.randint(1, 3)) for _ in range(deg)] + [1])
        if rng.random() < 0.5:
            p = p * P(rng.randint(-3, 3), 1) ** 2
        roots = isolate_real_roots(p)
        assert len(roots) == count_roots(p).distinct_real
        # intervals disjoint and sorted
        for a, b in zip(roots, roots[1:]):
            assert a.hi < b.lo or (a.is_exact() and a.value < b.lo) or a.hi <= b.lo


def test_root_multiplicity_sum():
    p = P(-1, 1) ** 2 * P(-2, 1) * P(1, 0, 1)  # complex pair contributes nothing
    roots = isolate_real_roots(p)
    assert sorted(r.multiplicity for r in roots) == [1, 2]


# -- interval sign verdicts --------------------------------------------------------


def test_sign_on_interval():
    f = -ONE * P(-1, 1) * P(-2, 1)
    assert sign_on_interval(f, 1, 2) == "positive"
    assert sign_on_interval(X, -1, 1) == "mixed-or-zero"
    assert sign_on_interval(P(1, 0, 1), -5, 5) == "positive"
    assert sign_on_interval(-ONE * P(1, 0, 1), -5, 5) == "negative"


def test_sign_on_interval_endpoint_roots_ok():
    f = P(-6, 5, -1)  # -(x-2)(x-3)
    assert sign_on_interval(f, 2, 3) == "positive"


# -- helpers -------------------------------------------------------------------------


def test_simplest_in_interval():
    assert simplest_in_interval(Fraction(1, 3), Fraction(1, 2)) == Fraction(2, 5)
    assert simplest_in_interval(Fraction(3, 2), Fraction(7, 2)) == 2
    assert simplest_in_interval(Fraction(-1, 2), Fraction(1, 2)) == 0
    v = simplest_in_interval(Fraction(141, 100), Fraction(142, 100))
    assert Fraction(141, 100) < v < Fraction(142, 100)


def test_cauchy_bound_contains_roots():
    p = P(-6, 11, -6, 1)  # roots 1, 2, 3
    b = cauchy_bound(p)
    assert b > 3


def test_real_root_sign_of():
    [r] = [x for x in isolate_real_roots(P(-2, 0, 1)) if x.lo > 0]
    w = P(-1, 1)  # x - 1: positive at sqrt(2)
    assert r.sign_of(w) == 1
    assert r.sign_of(P(-2, 0, 1)) == 0  # its own polynomial
    assert r.sign_of(P(-3, 0, 1)) == -1  # x^2 - 3 negative at sqrt(2)


def test_oracle_equivalence_sample():
    rng = random.Random(23)
    for _ in range(60):
        deg = rng.randint(2, 8)
        p = Poly(
            [Fraction(rng.randint(-10, 10), rng.randint(1, 4)) for _ in range(deg)]
            + [Fraction(rng.choice([1, 2, 3]))]
        )
        if rng.random() < 0.5:
            p = p * P(Fraction(rng.randint(-4, 4)), 1) ** 2
        sf = squarefree_part(p)
        if sf.degree < 1:
            continue
        bound = cauchy_bound(sf) + 1
        assert count_roots(p).distinct_real == sturm_count(sf, -bound, bound)


def test_fundamental_count_matches_squarefree_degree():
    rng = random.Random(31)
    for _ in range(40):
        deg = rng.randint(2, 7)
        p = Poly([Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(deg)] + [1])
        if rng.random() < 0.5:
            p = p * P(rng.randint(-3, 3), 1) ** 2
        rc = count_roots(p)
        assert rc.distinct_real + 2 * rc.imaginary_pairs == squarefree_part(p).degree


def test_sign_on_interval_worked_cycle_strip():
    # Q of the worked type-(2,5) curve is positive on its cycle interval
    from hypercycles.polyx import parse_poly

    Q = parse_poly("-10(x-1)(x-2)(x+10)^4")
    assert sign_on_interval(Q, 1, 2) == "positive"
    assert sign_on_interval(Q, 2, 3) == "negative"
