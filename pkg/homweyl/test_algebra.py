"""
Tests for exact arithmetic in A_1 and A_1^k
"""

from fractions import Fraction

import pytest
from hypothesis import given

from conftest import contexts, nonzero_polys, polys, scalars
from homweyl.algebra import (
    NEG_INF,
    ONE,
    X,
    Y,
    ZERO,
    AlgebraCtx,
    WeylPoly,
    add,
    alpha,
    alpha_exp,
    alpha_inv,
    assoc_mul,
    assoc_power,
    associator,
    commutator,
    const,
    d_dx,
    d_dy,
    enumerate_monomials,
    hom_associativity_defect,
    hom_jacobiator,
    is_scalar,
    monomial,
    neg,
    parse_scalar,
    scale,
    star_associator,
    star_commutator,
    star_mul,
    star_power_left,
    sub,
    substitute_x,
    to_scalar,
    total_degree,
    x_poly,
)

YX = monomial(1, 1)


def poly(*terms):
    """poly((i, j, c), ...) = sum of c y^i x^j"""
    return WeylPoly.from_terms(((i, j), c) for i, j, c in terms)


class TestWeylPoly:
    def test_zero_coefficients_are_dropped(self):
        p = WeylPoly({(1, 0): 0, (0, 1): Fraction(2, 4)})
        assert p.support() == [(0, 1)]
        assert p.coefficient(0, 1) == Fraction(1, 2)

    def test_from_terms_collects_like_terms(self):
        assert WeylPoly.from_terms([((1, 1), 1), ((1, 1), 1), ((0, 0), 1)]) == poly((1, 1, 2), (0, 0, 1))

    def test_canonical_order(self):
        p = poly((0, 0, 1), (0, 2, 1), (1, 1, 1), (2, 0, 1), (0, 1, 1))
        assert p.support() == [(2, 0), (1, 1), (0, 2), (0, 1), (0, 0)]

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            WeylPoly({(-1, 0): 1})

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            to_scalar(0.5)

    def test_equality_with_scalars(self):
        assert const(3) == 3
        assert ZERO == 0
        assert X != 1

    def test_operators(self):
        assert X + Y - Y == X
        assert -X == scale(-1, X)

    def test_hash_follows_equality(self):
        assert hash(poly((1, 0, 1), (0, 1, 1))) == hash(add(X, Y))

    def test_scalars_hash_as_their_value(self):
        assert hash(const(3)) == hash(3)
        assert hash(const(Fraction(1, 2))) == hash(Fraction(1, 2))
        assert hash(ZERO) == hash(0)
        assert {const(3): "c"}[3] == "c"
        assert len({const(2), 2, Fraction(2)}) == 1


class TestLinearStructure:
    def test_add_cancels(self):
        assert add(add(Y, X), neg(Y)) == X

    def test_add_zero(self):
        p = poly((2, 1, 3), (0, 0, -1))
        assert add(ZERO, p) == p

    def test_add_collects(self):
        assert add(add(YX, ONE), YX) == poly((1, 1, 2), (0, 0, 1))

    @given(polys, polys)
    def test_sub_is_add_neg(self, p, q):
        assert sub(p, q) == add(p, neg(q))
        assert add(sub(p, q), q) == p


class TestAssocMul:
    def test_commutation_relation(self):
        assert assoc_mul(X, Y) == add(YX, ONE)
        assert commutator(X, Y) == ONE

    def test_unit(self):
        p = poly((3, 1, 2), (0, 2, -1))
        assert assoc_mul(ONE, p) == p
        assert assoc_mul(p, ONE) == p

    def test_x_squared_past_y(self):
        assert assoc_mul(monomial(0, 2), Y) == poly((1, 2, 1), (0, 1, 2))

    def test_power(self):
        assert assoc_power(Y, 3) == monomial(3, 0)
        assert assoc_power(X, 0) == ONE
        with pytest.raises(ValueError):
            assoc_power(X, -1)

    @given(polys, polys, polys)
    def test_associative(self, p, q, r):
        assert associator(p, q, r) == ZERO

    @given(scalars, polys, polys, polys)
    def test_bilinear(self, c, p, q, r):
        assert assoc_mul(add(scale(c, p), q), r) == add(scale(c, assoc_mul(p, r)), assoc_mul(q, r))


class TestDerivatives:
    def test_power_rule(self):
        assert d_dy(monomial(2, 1)) == scale(2, YX)

    def test_constant_in_x(self):
        assert d_dx(Y) == ZERO

    def test_mixed_partials_commute(self):
        p = monomial(2, 2)
        assert d_dy(d_dx(p)) == d_dx(d_dy(p)) == scale(4, YX)


class TestAlpha:
    def test_binomial_shift(self, ctx):
        k = ctx.k
        assert alpha(ctx, monomial(2, 0)) == poly((2, 0, 1), (1, 0, 2 * k), (0, 0, k * k))

    def test_fixes_x(self, ctx):
        assert alpha(ctx, X) == X

    def test_shift_at_one(self):
        assert alpha(AlgebraCtx(1), add(YX, ONE)) == poly((1, 1, 1), (0, 1, 1), (0, 0, 1))

    def test_inverse(self):
        assert alpha_inv(AlgebraCtx(1), Y) == sub(Y, ONE)
        p = poly((1, 1, 1), (0, 0, 5))
        assert alpha_inv(AlgebraCtx(0), p) == p

    @given(contexts, polys)
    def test_inverse_round_trip(self, ctx, p):
        assert alpha_inv(ctx, alpha(ctx, p)) == p
        assert alpha(ctx, alpha_inv(ctx, p)) == p

    @given(contexts, polys)
    def test_matches_exponential_series(self, ctx, p):
        assert alpha(ctx, p) == alpha_exp(ctx, p)

    @given(contexts, polys, polys)
    def test_multiplicative(self, ctx, p, q):
        assert alpha(ctx, assoc_mul(p, q)) == assoc_mul(alpha(ctx, p), alpha(ctx, q))

    def test_unital(self, ctx):
        assert alpha(ctx, ONE) == ONE


class TestStarProduct:
    def test_weak_unit_on_y(self, ctx):
        assert star_mul(ctx, ONE, Y) == add(Y, const(ctx.k))

    @given(polys, polys)
    def test_k_zero_is_assoc(self, p, q):
        assert star_mul(AlgebraCtx(0), p, q) == assoc_mul(p, q)

    def test_x_star_y(self):
        assert star_mul(AlgebraCtx(1), X, Y) == poly((1, 1, 1), (0, 1, 1), (0, 0, 1))

    @given(contexts, polys)
    def test_weak_unit(self, ctx, p):
        assert star_mul(ctx, ONE, p) == star_mul(ctx, p, ONE) == alpha(ctx, p)

    @given(contexts, polys, polys, polys)
    def test_hom_associative(self, ctx, p, q, r):
        assert hom_associativity_defect(ctx, p, q, r) == ZERO

    @given(contexts, scalars, scalars)
    def test_scalars_multiply_as_in_the_field(self, ctx, a, b):
        assert star_mul(ctx, const(a), const(b)) == const(a * b)


class TestBrackets:
    def test_star_commutator_of_generators(self, ctx):
        assert star_commutator(ctx, X, Y) == ONE

    def test_x_against_y_squared(self):
        assert star_commutator(AlgebraCtx(1), X, monomial(2, 0)) == poly((1, 0, 2), (0, 0, 2))

    @given(contexts, polys)
    def test_alternating(self, ctx, p):
        assert star_commutator(ctx, p, p) == ZERO

    @given(contexts, polys, polys)
    def test_star_commutator_is_twisted_commutator(self, ctx, p, q):
        assert star_commutator(ctx, p, q) == alpha(ctx, commutator(p, q))

    @given(contexts, polys)
    def test_commutation_relations(self, ctx, p):
        assert star_commutator(ctx, X, p) == d_dy(alpha(ctx, p))
        assert star_commutator(ctx, p, Y) == d_dx(alpha(ctx, p))

    @given(contexts, polys, polys, polys)
    def test_hom_jacobi(self, ctx, a, b, c):
        assert hom_jacobiator(ctx, a, b, c) == ZERO


class TestAssociators:
    def test_yx_cube(self, ctx):
        k = ctx.k
        expected = poly((1, 2, 2 * k), (0, 2, 4 * k * k), (0, 1, k))
        assert star_associator(ctx, YX, YX, YX) == expected

    def test_yx_cube_at_two(self):
        assert star_associator(AlgebraCtx(2), YX, YX, YX) == poly((1, 2, 4), (0, 2, 16), (0, 1, 2))

    @pytest.mark.parametrize('c', [Fraction(1), Fraction(-2), Fraction(1, 2)])
    def test_scalar_y_y(self, ctx, c):
        k = ctx.k
        assert star_associator(ctx, const(c), Y, Y) == poly((0, 0, -2 * c * k * k), (1, 0, -c * k))

    @given(polys, polys, polys)
    def test_vanishes_when_associative(self, p, q, r):
        assert star_associator(AlgebraCtx(0), p, q, r) == ZERO


class TestStarPower:
    def test_associative_case(self):
        assert star_power_left(AlgebraCtx(0), Y, 3) == monomial(3, 0)

    def test_x_only(self, ctx):
        assert star_power_left(ctx, X, 2) == monomial(0, 2)

    def test_yx_squared_at_one(self):
        # alpha_1(y^2 x^2 + y x)
        expected = poly((2, 2, 1), (1, 2, 2), (0, 2, 1), (1, 1, 1), (0, 1, 1))
        assert star_power_left(AlgebraCtx(1), YX, 2) == expected

    def test_first_power(self, ctx):
        assert star_power_left(ctx, YX, 1) == YX

    def test_zero_power_rejected(self, ctx):
        with pytest.raises(ValueError):
            star_power_left(ctx, YX, 0)


class TestDegree:
    def test_total_degree(self):
        assert total_degree(add(YX, ONE)) == 2

    def test_zero_is_negative_infinity(self):
        assert total_degree(ZERO) == NEG_INF
        assert total_degree(ZERO) + 3 == NEG_INF

    @given(contexts, nonzero_polys, nonzero_polys)
    def test_additive(self, ctx, p, q):
        product = star_mul(ctx, p, q)
        assert product != ZERO
        assert total_degree(product) == total_degree(p) + total_degree(q)

    def test_is_scalar(self):
        assert is_scalar(const(Fraction(3, 2)))
        assert is_scalar(ZERO)
        assert not is_scalar(X)


class TestHelpers:
    def test_enumerate_monomials(self):
        assert enumerate_monomials(0) == [ONE]
        assert enumerate_monomials(1) == [ONE, Y, X]
        assert len(enumerate_monomials(2)) == 6
        assert len(enumerate_monomials(6)) == 28

    def test_substitute_x(self):
        p = x_poly([1, 0, 1])  # 1 + x^2
        assert substitute_x(p, add(X, ONE)) == x_poly([2, 2, 1])

    def test_substitute_x_rejects_y(self):
        with pytest.raises(ValueError):
            substitute_x(Y, X)

    @pytest.mark.parametrize('text, value', [('3', Fraction(3)), ('-1/2', Fraction(-1, 2)), ('4/6', Fraction(2, 3))])
    def test_parse_scalar(self, text, value):
        assert parse_scalar(text) == value

    @pytest.mark.parametrize('text', ['1/0', 'x', '1.5', '', '1/-2'])
    def test_parse_scalar_rejects(self, text):
        with pytest.raises(ValueError):
            parse_scalar(text)
