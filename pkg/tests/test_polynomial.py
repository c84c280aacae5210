"""Tests for the monic polynomial helpers."""

import numpy as np
import pytest

from src.minpoly.polynomial import (
    Polynomial,
    ShortlistKind,
    format_polynomial,
    minpoly_block_diagonal,
    poly_gcd,
    poly_lcm,
    reverse_poly,
    screen_shortlist,
)


class TestPolynomial:
    def test_must_be_monic(self):
        with pytest.raises(ValueError, match="not monic"):
            Polynomial((1.0, 2.0))

    def test_from_coeffs_trims_and_normalizes(self):
        poly = Polynomial.from_coeffs([2.0, 4.0, 1e-14])
        assert poly.to_list() == [0.5, 1.0]

    def test_from_roots(self):
        assert Polynomial.from_roots([1.0, -1.0]).allclose(Polynomial((-1.0, 0.0, 1.0)))

    def test_from_roots_keeps_leading_term_of_large_roots(self):
        poly = Polynomial.from_roots([1e6, -1e6, 2e6])
        assert poly.degree == 3

    def test_monomial_and_linear(self):
        assert Polynomial.monomial(2).to_list() == [0.0, 0.0, 1.0]
        assert Polynomial.linear(3.0).to_list() == [-3.0, 1.0]

    def test_negative_zero_is_normalized(self):
        poly = Polynomial((-0.0, 1.0))
        assert str(poly.to_list()[0]) == "0.0"

    def test_evaluate_matrix(self, j4):
        """x^2 + 1 annihilates J4."""
        assert Polynomial((1.0, 0.0, 1.0)).residual(j4) == 0.0

    def test_compose_shift(self):
        """p(x - a) keeps the degree and moves the roots by a."""
        poly = Polynomial((-1.0, 0.0, 1.0)).compose_shift(2.0)
        assert poly.allclose(Polynomial((3.0, -4.0, 1.0)))
        assert sorted(poly.roots().real) == pytest.approx([1.0, 3.0])

    def test_product(self):
        product = Polynomial.linear(1.0) * Polynomial.linear(-1.0)
        assert product.allclose(Polynomial((-1.0, 0.0, 1.0)))

    def test_max_difference(self):
        a = Polynomial((1.0, 0.0, 1.0))
        assert a.max_difference(Polynomial((1.5, 0.0, 1.0))) == 0.5
        assert a.max_difference(Polynomial.linear(0.0)) == float("inf")
        assert not a.allclose(Polynomial.linear(0.0))

    def test_equality_and_hash(self):
        assert Polynomial((1.0, 1.0)) == Polynomial((1, 1))
        assert len({Polynomial((1.0, 1.0)), Polynomial((1.0, 1.0))}) == 1


class TestFormatting:
    def test_format(self):
        assert format_polynomial([0.0, -4.0, 0.0, 1.0]) == "x^3 - 4x"
        assert format_polynomial([1.0, 0.0, 1.0]) == "x^2 + 1"
        assert format_polynomial([-2.5, 1.0]) == "x - 2.5"
        assert format_polynomial([0.0]) == "0"

    def test_str_uses_format(self):
        assert str(Polynomial((1.0, -2.0, 1.0))) == "x^2 - 2x + 1"

    def test_reverse(self):
        assert reverse_poly(Polynomial((1.0, 2.0, 3.0, 1.0))) == [1.0, 3.0, 2.0, 1.0]
        assert reverse_poly([5.0, 1.0]) == [1.0, 5.0]


class TestShortlistScreens:
    def test_even_and_odd_pass(self):
        assert screen_shortlist(Polynomial((1.0, 0.0, 1.0)), ShortlistKind.SIMILAR_TO_MINUS)
        assert screen_shortlist(Polynomial((0.0, 3.0, 0.0, 1.0)), ShortlistKind.SIMILAR_TO_MINUS)

    def test_mixed_parity_fails(self):
        result = screen_shortlist(Polynomial((1.0, 1.0, 1.0)), ShortlistKind.SIMILAR_TO_MINUS)
        assert not result
        assert result.clause == "degree-2 polynomial is not even"

    def test_palindromic_passes(self):
        poly = Polynomial((1.0, -0.5, 0.3, -0.5, 1.0))
        assert screen_shortlist(poly, ShortlistKind.SIMILAR_TO_INVERSE_TRANSPOSE)

    def test_anti_palindromic_passes(self):
        poly = Polynomial((-1.0, 2.0, -2.0, 1.0))
        assert screen_shortlist(poly, ShortlistKind.SIMILAR_TO_INVERSE_TRANSPOSE)

    def test_constant_term_clause(self):
        result = screen_shortlist(Polynomial((2.0, 0.0, 1.0)), ShortlistKind.SIMILAR_TO_INVERSE_TRANSPOSE)
        assert not result.passed
        assert "is not +1 or -1" in result.clause

    def test_reverse_clause(self):
        result = screen_shortlist(
            Polynomial((1.0, 2.0, 0.0, 1.0)), ShortlistKind.SIMILAR_TO_INVERSE_TRANSPOSE
        )
        assert result.clause == "polynomial does not equal its reverse"


class TestGcdLcm:
    def test_gcd(self):
        a = Polynomial.from_roots([1.0, 2.0])
        b = Polynomial.from_roots([2.0, 3.0])
        assert poly_gcd(a, b).allclose(Polynomial.linear(2.0))

    def test_coprime_gcd_is_one(self):
        assert poly_gcd(Polynomial.linear(1.0), Polynomial.linear(2.0)).to_list() == [1.0]

    def test_lcm(self):
        a = Polynomial.from_roots([1.0, 2.0])
        b = Polynomial.from_roots([2.0, 3.0])
        assert poly_lcm(a, b).allclose(Polynomial.from_roots([1.0, 2.0, 3.0]))

    def test_block_diagonal(self):
        """lcm(x^2 + 1, x^2 + 1, x - 1) = (x^2 + 1)(x - 1)."""
        quadratic = Polynomial((1.0, 0.0, 1.0))
        result = minpoly_block_diagonal([quadratic, quadratic, Polynomial.linear(1.0)])
        assert result.allclose(Polynomial((-1.0, 1.0, -1.0, 1.0)))

    def test_block_diagonal_needs_input(self):
        with pytest.raises(ValueError, match="at least one"):
            minpoly_block_diagonal([])

    def test_block_diagonal_matches_matrix(self, j4):
        matrix = np.zeros((8, 8))
        matrix[:4, :4] = j4
        matrix[4:, 4:] = 2.0 * np.eye(4)
        result = minpoly_block_diagonal([Polynomial((1.0, 0.0, 1.0)), Polynomial.linear(2.0)])
        assert result.degree == 3
        assert result.residual(matrix) < 1e-12
