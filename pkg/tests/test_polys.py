"""Exact polynomial arithmetic and real root isolation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from freebraid.polys import (
    ZERO,
    add,
    bisect_once,
    count_roots,
    degree,
    derivative,
    divmod_poly,
    evaluate,
    have_common_root,
    is_zero,
    isolate_roots,
    monic,
    mul,
    poly,
    poly_gcd,
    refine_root,
    scale,
    squarefree_part,
    sturm_chain,
    sub,
)


def P(*coeffs):
    return poly(Fraction(c) for c in coeffs)


rationals = st.fractions(
    min_value=-8, max_value=8, max_denominator=16
)
polys = st.lists(rationals, min_size=0, max_size=5).map(poly)


class TestArithmetic:
    def test_poly_strips_leading_zeros(self):
        assert poly([1, 2, 0, 0]) == (Fraction(1), Fraction(2))
        assert poly([0, 0]) == ZERO
        assert poly([]) == ZERO

    def test_degree(self):
        assert degree(ZERO) == -1
        assert degree(P(5)) == 0
        assert degree(P(0, 0, 3)) == 2

    def test_evaluate_horner(self):
        # 2 - 3t + t^2 at t=5: 2 - 15 + 25 = 12
        assert evaluate(P(2, -3, 1), Fraction(5)) == 12
        assert evaluate(ZERO, Fraction(7)) == 0

    def test_add_sub_mul(self):
        f = P(1, 1)
        g = P(-1, 1)
        assert mul(f, g) == P(-1, 0, 1)
        assert add(f, g) == P(0, 2)
        assert sub(f, f) == ZERO
        assert mul(f, ZERO) == ZERO

    def test_scale(self):
        assert scale(P(2, 4), Fraction(1, 2)) == P(1, 2)
        assert scale(P(2, 4), Fraction(0)) == ZERO

    def test_derivative(self):
        assert derivative(P(7)) == ZERO
        assert derivative(P(1, 2, 3)) == P(2, 6)

    def test_divmod_exact(self):
        f = mul(P(-1, 1), P(-2, 1))
        q, r = divmod_poly(f, P(-1, 1))
        assert q == P(-2, 1)
        assert is_zero(r)

    def test_divmod_remainder(self):
        q, r = divmod_poly(P(1, 0, 1), P(-1, 1))
        # t^2 + 1 = (t+1)(t-1) + 2
        assert q == P(1, 1)
        assert r == P(2)

    def test_divmod_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod_poly(P(1), ZERO)

    @given(polys, polys)
    @settings(max_examples=60, deadline=None)
    def test_divmod_reconstructs(self, f, g):
        if is_zero(g):
            return
        q, r = divmod_poly(f, g)
        assert add(mul(q, g), r) == f
        assert degree(r) < degree(g)

    @given(polys, polys, polys)
    @settings(max_examples=60, deadline=None)
    def test_mul_distributes(self, f, g, h):
        assert mul(f, add(g, h)) == add(mul(f, g), mul(f, h))


class TestGcdSquarefree:
    def test_gcd_of_coprime_is_constant(self):
        g = poly_gcd(P(-1, 1), P(-2, 1))
        assert degree(g) == 0

    def test_gcd_common_factor(self):
        common = P(-3, 1)
        f = mul(common, P(1, 1))
        g = mul(common, P(5, 2))
        assert monic(poly_gcd(f, g)) == common

    def test_gcd_with_zero(self):
        assert poly_gcd(ZERO, P(2, 4)) == monic(P(2, 4))

    @given(polys, polys)
    @settings(max_examples=60, deadline=None)
    def test_gcd_divides_both(self, f, g):
        d = poly_gcd(f, g)
        if is_zero(d):
            assert is_zero(f) and is_zero(g)
            return
        for h in (f, g):
            _, r = divmod_poly(h, d)
            assert is_zero(r)

    def test_squarefree_kills_multiplicity(self):
        f = mul(mul(P(-1, 1), P(-1, 1)), P(-2, 1))
        assert squarefree_part(f) == mul(P(-1, 1), P(-2, 1))

    def test_squarefree_of_squarefree(self):
        f = mul(P(-1, 1), P(-2, 1))
        assert squarefree_part(f) == f


class TestSturm:
    def test_chain_starts_with_poly_and_derivative(self):
        f = P(-2, 0, 1)
        chain = sturm_chain(f)
        assert chain[0] == f
        assert chain[1] == derivative(f)

    def test_count_roots_quadratic(self):
        f = P(-2, 0, 1)  # roots +-sqrt(2)
        assert count_roots(f, Fraction(0), Fraction(2)) == 1
        assert count_roots(f, Fraction(-2), Fraction(2)) == 2
        assert count_roots(f, Fraction(2), Fraction(3)) == 0

    def test_count_roots_rejects_root_endpoint(self):
        f = P(-1, 1)
        with pytest.raises(ValueError):
            count_roots(f, Fraction(1), Fraction(2))

    def test_count_linear(self):
        assert count_roots(P(-1, 2), Fraction(0), Fraction(1)) == 1


class TestIsolation:
    def test_no_roots(self):
        assert isolate_roots(P(1, 0, 1), Fraction(0), Fraction(1)) == ()

    def test_single_interior_root(self):
        ivs = isolate_roots(P(-1, 2), Fraction(0), Fraction(1))
        assert len(ivs) == 1
        lo, hi = ivs[0]
        assert lo < Fraction(1, 2) < hi

    def test_rational_root_at_bisection_midpoint(self):
        # root exactly 1/2: the first bisection midpoint
        ivs = isolate_roots(P(-1, 2), Fraction(0), Fraction(1))
        (lo, hi), = ivs
        assert evaluate(P(-1, 2), lo) != 0 and evaluate(P(-1, 2), hi) != 0

    def test_two_close_roots_separated(self):
        f = mul(P(Fraction(-3, 8), 1), P(Fraction(-5, 8), 1))
        ivs = isolate_roots(f, Fraction(0), Fraction(1))
        assert len(ivs) == 2
        (a1, b1), (a2, b2) = ivs
        assert b1 <= a2
        assert a1 < Fraction(3, 8) < b1
        assert a2 < Fraction(5, 8) < b2

    def test_irrational_roots(self):
        f = P(Fraction(1, 4), -2, 1)  # roots 1 +- sqrt(3)/2... check: t^2-2t+1/4
        ivs = isolate_roots(f, Fraction(0), Fraction(1))
        assert len(ivs) == 1

    def test_requires_squarefree_input_roots_still_found(self):
        # callers pass squarefree polys; squarefree_part first
        f = mul(P(-1, 2), P(-1, 2))
        ivs = isolate_roots(squarefree_part(f), Fraction(0), Fraction(1))
        assert len(ivs) == 1

    def test_isolation_count_matches_sturm(self):
        f = mul(mul(P(Fraction(-1, 7), 1), P(Fraction(-1, 2), 1)), P(Fraction(-6, 7), 1))
        ivs = isolate_roots(f, Fraction(0), Fraction(1))
        assert len(ivs) == 3
        for lo, hi in ivs:
            assert count_roots(f, lo, hi) == 1


class TestRefinement:
    def test_refine_shrinks_below_width(self):
        f = P(-2, 0, 1)
        lo, hi = refine_root(f, Fraction(1), Fraction(2), Fraction(1, 1024))
        assert hi - lo <= Fraction(1, 1024)
        assert count_roots(f, lo, hi) == 1

    def test_refine_lands_on_rational_root(self):
        f = P(-1, 3)
        lo, hi = refine_root(f, Fraction(0), Fraction(1), Fraction(1, 4096))
        assert lo < Fraction(1, 3) < hi
        assert hi - lo <= Fraction(1, 4096)

    def test_bisect_once_keeps_root(self):
        f = P(-2, 0, 1)
        lo, hi = bisect_once(f, Fraction(1), Fraction(2))
        assert hi - lo < Fraction(1)
        assert count_roots(f, lo, hi) == 1


class TestCommonRoot:
    def test_shared_irrational_root(self):
        f = P(-2, 0, 1)            # sqrt(2)
        g = mul(P(-2, 0, 1), P(1, 1))
        assert have_common_root(f, g, Fraction(1), Fraction(2))

    def test_disjoint_roots(self):
        f = P(Fraction(-1, 3), 1)
        g = P(Fraction(-2, 3), 1)
        assert not have_common_root(f, g, Fraction(0), Fraction(1))

    def test_common_factor_root_outside_window(self):
        common = P(-5, 1)
        f = mul(common, P(Fraction(-1, 2), 1))
        g = mul(common, P(Fraction(-1, 4), 1))
        # shared root t=5 sits outside (0,1); the window roots differ
        assert not have_common_root(f, g, Fraction(0), Fraction(1))
