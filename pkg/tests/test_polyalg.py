"""Exact-arithmetic layer: ring operations, substitution machinery,
quotients and the binomial identity."""

import random
from fractions import Fraction

import pytest

from conftest import brute_substitute, random_poly2, random_rational
from weingarten_tubes.errors import ZeroPolynomial, ZeroRadius
from weingarten_tubes.polyalg import (
    Poly1,
    Poly2,
    binom,
    binomial_alternating_sum,
    divide_by_tube_factor,
    epsilon_transform,
    gamma_at,
    gamma_cleared,
    is_in_tube_ideal,
    lemma_identity_defined,
    substitute_tube,
    tube_generator,
)

X = Poly2.variable("x")
Y = Poly2.variable("y")


class TestRingOperations:
    def test_additive_inverse_is_zero(self):
        p = X + Y
        assert (p + (-p)).is_zero
        assert (p + (-p)) == Poly2.zero()

    def test_mul_generator_times_linear(self):
        # (25x - 10y + 1)(4y - 1) = 100xy - 40y^2 + 14y - 25x - 1
        gen = tube_generator(5)
        assert gen == 25 * X - 10 * Y + Poly2.constant(1)
        product = gen * (4 * Y - Poly2.constant(1))
        expected = 100 * X * Y - 40 * Y * Y + 14 * Y - 25 * X - Poly2.constant(1)
        assert product == expected

    def test_eq_is_reflexive(self):
        rng = random.Random(7)
        for _ in range(50):
            q = random_poly2(rng, 5)
            assert q == q

    def test_zero_polynomial_degree(self):
        assert Poly2.zero().degree == -1
        assert Poly1.zero().degree == -1

    def test_canonical_order(self):
        p = Poly2([((0, 2), 1), ((1, 1), 1), ((2, 0), 1), ((0, 0), 3)])
        assert [e for e, _ in p.terms()] == [(2, 0), (1, 1), (0, 2), (0, 0)]

    def test_poly1_divmod_roundtrip(self):
        rng = random.Random(11)
        for _ in range(50):
            a = Poly1([random_rational(rng) for _ in range(rng.randint(1, 7))])
            b = Poly1([random_rational(rng) for _ in range(rng.randint(1, 5))])
            if b.is_zero:
                continue
            quo, rem = a.divmod(b)
            assert quo * b + rem == a
            assert rem.degree < b.degree or rem.is_zero


class TestGamma:
    def test_gamma_exq_independent_term(self, exq_poly):
        # Gamma_0(r) = -(96r^3 - 196r^2 + 7r + 2)/(4r^3)
        for r in (Fraction(1), Fraction(3), Fraction(7, 5), Fraction(-2, 3)):
            expected = -Fraction(96 * r**3 - 196 * r**2 + 7 * r + 2, 1) / (4 * r**3)
            assert gamma_at(exq_poly, r)[0] == expected
        # zeros at r = 1/8, 2, -1/12
        for root in (Fraction(1, 8), Fraction(2), Fraction(-1, 12)):
            assert gamma_at(exq_poly, root)[0] == 0

    def test_gamma_xy_at_one(self):
        # x*y at r=1: Q(x, (x+1)/2) = x^2/2 + x/2
        assert gamma_at(X * Y, 1) == [Fraction(0), Fraction(1, 2), Fraction(1, 2)]

    def test_gamma_constant(self):
        assert gamma_at(Poly2.constant(Fraction(5, 3)), Fraction(2, 7)) == [Fraction(5, 3)]

    def test_gamma_zero_radius(self):
        with pytest.raises(ZeroRadius):
            gamma_at(X, 0)

    def test_gamma_cleared_exq(self, exq_poly):
        # g_0(r) = 2^4 r^4 Gamma_0(r) = -4r(96r^3 - 196r^2 + 7r + 2)
        g0 = gamma_cleared(exq_poly)[0]
        assert g0 == Poly1([0, -8, -28, 784, -384])

    def test_gamma_cleared_mean_curvature(self):
        # Q = y - c: g_0 = 1 - 2cr, g_1 = r
        c = Fraction(3, 2)
        g = gamma_cleared(Y - Poly2.constant(c))
        assert g[0] == Poly1([1, -2 * c])
        assert g[1] == Poly1([0, 1])

    def test_gamma_cleared_gauss_relation(self):
        # Q = x: Gamma = [0, 1/r]; under the 2^n r^n scaling g_1 is the
        # constant 2 (and g_0 vanishes identically)
        g = gamma_cleared(X)
        assert g[0].is_zero
        assert g[1] == Poly1.constant(2)

    def test_gamma_cleared_rejects_zero(self):
        with pytest.raises(ZeroPolynomial):
            gamma_cleared(Poly2.zero())

    def test_gamma_cleared_matches_gamma_at(self):
        rng = random.Random(23)
        for _ in range(100):
            q = random_poly2(rng, 5)
            if q.is_zero:
                continue
            r = random_rational(rng)
            if r == 0:
                continue
            n = q.degree
            scale = Fraction(2) ** n * r**n
            cleared = gamma_cleared(q)
            for gk, value in zip(cleared, gamma_at(q, r)):
                assert gk.eval(r) == scale * value


class TestSubstitution:
    def test_example_sq_at_two(self, sq_poly):
        assert substitute_tube(sq_poly, 2) == Poly1([0, -3, 15])

    def test_example_exq_vanishes_at_two(self, exq_poly):
        assert substitute_tube(exq_poly, 2).is_zero

    def test_mean_curvature_image(self):
        # Q = y - c at r = 1/(2c): image is x/2
        c = Fraction(3)
        image = substitute_tube(Y - Poly2.constant(c), Fraction(1, 2 * c))
        assert image == Poly1([0, Fraction(1, 2)])

    def test_exq_full_coefficient_display(self, exq_poly):
        # all five substitution coefficients as rational functions of r
        for r in (Fraction(1), Fraction(2), Fraction(3), Fraction(-5, 7), Fraction(11, 4)):
            image = substitute_tube(exq_poly, r)
            assert image.coeff(4) == Fraction(-3 * r**3 + 4 * r**2 + 8, 1) / (2 * r**4)
            assert image.coeff(3) == -Fraction(2 * r**3 + 9 * r**2 - 52, 1) / (4 * r**3)
            assert image.coeff(2) == -Fraction(7 * r**4 + 22 * r**3 - 70 * r**2 - 8, 1) / (4 * r**4)
            assert image.coeff(1) == -Fraction(-196 * r**4 + 378 * r**3 + 22 * r**2 + 9 * r + 6, 1) / (4 * r**4)
            assert image.coeff(0) == -Fraction(96 * r**3 - 196 * r**2 + 7 * r + 2, 1) / (4 * r**3)

    def test_substitution_soundness_randomized(self):
        # eval-after-substitute equals substitute-after-eval, exactly
        rng = random.Random(101)
        for _ in range(1000):
            q = random_poly2(rng, rng.randint(0, 8), n_terms=5)
            r = random_rational(rng)
            if r == 0:
                continue
            eps = rng.choice((-1, 1))
            x0 = random_rational(rng)
            image = substitute_tube(q, r, eps)
            assert image.eval(x0) == q.eval(eps * x0 / r, eps * (x0 * r + 1) / (2 * r))

    def test_image_matches_independent_expansion(self):
        rng = random.Random(303)
        for _ in range(200):
            q = random_poly2(rng, 6)
            r = random_rational(rng)
            if r == 0:
                continue
            eps = rng.choice((-1, 1))
            assert list(substitute_tube(q, r, eps).coeffs) == brute_substitute(q, r, eps)


class TestIdealMembership:
    def test_exq_membership(self, exq_poly):
        assert is_in_tube_ideal(exq_poly, 2)
        assert not is_in_tube_ideal(exq_poly, 1)

    def test_zero_is_member(self):
        assert is_in_tube_ideal(Poly2.zero(), Fraction(7, 3), -1)

    def test_divide_exq(self, exq_poly):
        expected = (
            X * X * X + X * X * Y + 3 * X * Y * Y + 2 * X * X + 4 * X * Y + Y * Y
            + 5 * X + 2 * Y - Poly2.constant(24)
        )
        assert divide_by_tube_factor(exq_poly, 2) == expected

    def test_divide_sq(self, sq_poly):
        assert divide_by_tube_factor(sq_poly, 5) == 4 * Y - Poly2.constant(1)

    def test_divide_generator_by_itself(self):
        r = Fraction(9, 2)
        for eps in (1, -1):
            assert divide_by_tube_factor(tube_generator(r, eps), r, eps) == Poly2.constant(1)

    def test_divide_non_member_returns_none(self, exq_poly):
        assert divide_by_tube_factor(exq_poly, 1) is None

    def test_membership_roundtrip_randomized(self):
        # r ranges over nonzero rationals of both signs
        rng = random.Random(505)
        for _ in range(150):
            quotient = random_poly2(rng, 6)
            r = random_rational(rng, -10, 10)
            if r == 0:
                continue
            eps = rng.choice((-1, 1))
            q = tube_generator(r, eps) * quotient
            assert is_in_tube_ideal(q, r, eps)
            assert divide_by_tube_factor(q, r, eps) == quotient

    def test_non_membership_randomized(self):
        rng = random.Random(707)
        for _ in range(150):
            quotient = random_poly2(rng, 5)
            r = random_rational(rng, 1, 10)
            eps = rng.choice((-1, 1))
            c = Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((-1, 1))
            q = tube_generator(r, eps) * quotient + Poly2.constant(c)
            assert not is_in_tube_ideal(q, r, eps)


class TestEpsilonTransform:
    def test_linear_example(self):
        p = X + Y + Poly2.constant(1)
        assert epsilon_transform(p, -1) == -X - Y + Poly2.constant(1)

    def test_identity_for_plus_one(self):
        rng = random.Random(13)
        for _ in range(20):
            q = random_poly2(rng, 6)
            assert epsilon_transform(q, 1) == q

    def test_involution(self):
        rng = random.Random(17)
        for _ in range(50):
            q = random_poly2(rng, 6)
            assert epsilon_transform(epsilon_transform(q, -1), -1) == q

    def test_membership_transfer(self):
        # Q in <x r^2 - 2ry + eps>  iff  Q_eps in <x r^2 - 2ry + 1>
        rng = random.Random(19)
        for _ in range(100):
            quotient = random_poly2(rng, 4)
            r = random_rational(rng, 1, 9)
            q = tube_generator(r, -1) * quotient
            assert is_in_tube_ideal(q, r, -1)
            assert is_in_tube_ideal(epsilon_transform(q, -1), r, 1)
            shifted = q + Poly2.constant(1)
            assert is_in_tube_ideal(shifted, r, -1) == is_in_tube_ideal(
                epsilon_transform(shifted, -1), r, 1
            )


class TestBinomialLemma:
    def test_empty_alternation(self):
        assert binomial_alternating_sum(0, 7, 3) == 35

    def test_small_case(self):
        # C(5,3) - 2 C(4,3) + C(3,3) = 10 - 8 + 1 = 3 = C(3,1)
        assert binomial_alternating_sum(2, 5, 3) == 3
        assert binom(3, 1) == 3

    def test_negative_upper_index_corner(self):
        # hard-zero convention: every symbol C(2-m, 6) vanishes, so the
        # sum is 0, matching C(-2, 2) = 0 under the same convention
        assert binomial_alternating_sum(4, 2, 6) == 0
        assert binom(-2, 2) == 0

    def test_convention_pins(self):
        assert binom(5, -1) == 0
        assert binom(-3, 0) == 1
        assert binom(4, 7) == 0
        assert binom(6, 2) == 15

    def test_identity_on_defined_range(self):
        for n in range(0, 9):
            for x in range(-4, 13):
                for j in range(0, 13):
                    if lemma_identity_defined(n, x, j):
                        assert binomial_alternating_sum(n, x, j) == binom(x - n, j - n), (n, x, j)
