"""
Tests for the formal deformation in t
"""

import itertools
from fractions import Fraction

import pytest

from homweyl.algebra import (
    ONE,
    X,
    Y,
    ZERO,
    AlgebraCtx,
    add,
    assoc_mul,
    d_dy,
    enumerate_monomials,
    monomial,
    star_commutator,
    star_mul,
)
from homweyl.deformation import (
    TruncatedSeries,
    alpha_t,
    assoc_mul_t,
    bracket_t,
    check_hom_assoc_t,
    check_hom_jacobi_t,
    constant_series,
    evaluate_at,
    hom_assoc_defect_t,
    star_t,
)

Y2 = monomial(2, 0)


class TestTruncatedSeries:
    def test_pads_coefficients(self):
        s = constant_series(Y, 3)
        assert s.coeffs == (Y, ZERO, ZERO, ZERO)

    def test_too_many_coefficients(self):
        with pytest.raises(ValueError):
            TruncatedSeries(1, (X, Y, ONE))

    def test_negative_order(self):
        with pytest.raises(ValueError):
            TruncatedSeries(-1, ())

    def test_order_mismatch(self):
        a, b = constant_series(X, 2), constant_series(Y, 3)
        with pytest.raises(ValueError):
            a + b
        with pytest.raises(ValueError):
            star_t(a, b)
        with pytest.raises(ValueError):
            bracket_t(a, b)

    def test_nonzero_degrees(self):
        s = TruncatedSeries(3, (X, ZERO, Y))
        assert s.nonzero_degrees() == [0, 2]
        assert not s.is_zero()
        assert (s - s).is_zero()


class TestAlphaT:
    def test_y(self):
        assert alpha_t(constant_series(Y, 2)).coeffs == (Y, ONE, ZERO)

    def test_y_squared(self):
        assert alpha_t(constant_series(Y2, 2)).coeffs == (Y2, monomial(1, 0, 2), ONE)

    def test_order_zero_is_identity(self):
        p = add(monomial(3, 1), X)
        assert alpha_t(constant_series(p, 0)).coeffs == (p,)

    def test_spreads_higher_coefficients(self):
        s = TruncatedSeries(2, (ZERO, Y))
        assert alpha_t(s).coeffs == (ZERO, Y, ONE)


class TestStarT:
    def test_x_star_y(self):
        product = star_t(constant_series(X, 2), constant_series(Y, 2))
        assert product.coeffs == (add(monomial(1, 1), ONE), X, ZERO)

    def test_order_zero_is_assoc_mul(self):
        p, q = add(monomial(2, 1), Y), add(X, ONE)
        assert star_t(constant_series(p, 0), constant_series(q, 0))[0] == assoc_mul(p, q)

    def test_first_order_term(self):
        p, q = monomial(1, 2), add(Y2, X)
        product = star_t(constant_series(p, 4), constant_series(q, 4))
        assert product[1] == d_dy(assoc_mul(p, q))

    def test_assoc_mul_t_is_bilinear_in_t(self):
        s = TruncatedSeries(2, (X, Y))
        assert assoc_mul_t(s, s).coeffs == (monomial(0, 2), add(monomial(1, 1), add(monomial(1, 1), ONE)), Y2)

    @pytest.mark.parametrize('k', [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2)])
    def test_specialises_to_star_mul(self, k):
        p, q = add(monomial(2, 1), X), add(Y2, monomial(0, 2))
        ctx = AlgebraCtx(k)
        sp, sq = constant_series(p, 6), constant_series(q, 6)
        assert evaluate_at(star_t(sp, sq), k) == star_mul(ctx, p, q)
        assert evaluate_at(bracket_t(sp, sq), k) == star_commutator(ctx, p, q)


class TestHomIdentities:
    def test_x_y_x(self):
        verdict = check_hom_assoc_t(constant_series(X, 6), constant_series(Y, 6), constant_series(X, 6))
        assert verdict.passed

    def test_order_zero(self):
        a, b, c = (constant_series(p, 0) for p in (monomial(2, 1), Y, monomial(1, 2)))
        assert check_hom_assoc_t(a, b, c).passed
        assert check_hom_jacobi_t(a, b, c).passed

    @pytest.mark.slow
    def test_basis_triples_at_order_ten(self):
        for a, b, c in itertools.product(enumerate_monomials(4), repeat=3):
            sa, sb, sc = (constant_series(p, 10) for p in (a, b, c))
            assert check_hom_assoc_t(sa, sb, sc).passed, (a, b, c)
            assert check_hom_jacobi_t(sa, sb, sc).passed, (a, b, c)

    def test_untwisted_product_fails_with_degree(self):
        # with the plain product: alpha_t(y) (y x) - (y y) x = t y x
        a, b, c = constant_series(Y, 3), constant_series(Y, 3), constant_series(X, 3)
        defect = hom_assoc_defect_t(a, b, c, product=assoc_mul_t)
        verdict = check_hom_assoc_t(a, b, c, product=assoc_mul_t)
        assert not defect.is_zero()
        assert not verdict.passed
        assert verdict.clause == f"t^{defect.nonzero_degrees()[0]}"
        assert verdict.notes
