"""Tests for the skew-Hamiltonian Cayley transform."""

import numpy as np
import pytest

from src.applications.cayley import (
    CayleyCoefficients,
    cayley_skew_hamiltonian,
    cayley_transform_direct,
)
from src.errors import SpectrumContainsMinusOne
from src.families import FamilyTag, SkewHamiltonianParams, is_member

DRAWS = 200


class TestCayleyTransform:
    def test_defining_identity(self, rng):
        """(I + A)(c0 I + c1 A) = I - A."""
        checked = 0
        while checked < DRAWS:
            params = SkewHamiltonianParams(rng.normal(), rng.normal(size=3), rng.normal(), rng.normal())
            if abs((1.0 + params.b) ** 2 - params.mu2) < 0.1:
                continue
            a = params.matrix()
            try:
                coefficients, transform = cayley_skew_hamiltonian(params.b, params.p, params.c, params.d)
            except SpectrumContainsMinusOne:
                continue
            identity = np.eye(4)
            assert np.allclose((identity + a) @ transform, identity - a, atol=1e-10)
            assert np.allclose(coefficients.apply(a), transform)
            checked += 1

    def test_matches_direct_solve(self, rng):
        for _ in range(DRAWS):
            params = SkewHamiltonianParams(0.5 + abs(rng.normal()), rng.normal(size=3) * 0.3, 0.2, 0.1)
            _, transform = cayley_skew_hamiltonian(params.b, params.p, params.c, params.d)
            assert np.allclose(transform, cayley_transform_direct(params.matrix()), atol=1e-10)

    def test_transform_stays_skew_hamiltonian(self):
        """The Cayley transform of a skew-Hamiltonian matrix is again skew-Hamiltonian."""
        params = SkewHamiltonianParams(0.3, [0.2, 0.5, -0.1], 0.4, 0.2)
        _, transform = cayley_skew_hamiltonian(params.b, params.p, params.c, params.d)
        assert is_member(transform, FamilyTag.SKEW_HAMILTONIAN)

    def test_scalar_input(self):
        """A = bI gives (1 - b)/(1 + b)."""
        coefficients, transform = cayley_skew_hamiltonian(0.5, [0, 0, 0], 0.0, 0.0)
        assert np.allclose(transform, (0.5 / 1.5) * np.eye(4))
        assert coefficients.to_dict().keys() == {"c0", "c1"}

    def test_coefficients_apply(self):
        result = CayleyCoefficients(2.0, -1.0).apply(np.eye(2))
        assert np.array_equal(result, np.eye(2))


class TestMinusOneEigenvalue:
    def test_scalar_minus_one(self):
        with pytest.raises(SpectrumContainsMinusOne, match="-1 is an eigenvalue"):
            cayley_skew_hamiltonian(-1.0, [0, 0, 0], 0.0, 0.0)

    def test_defective_at_minus_one(self):
        """b = -1, mu = 0."""
        with pytest.raises(SpectrumContainsMinusOne):
            cayley_skew_hamiltonian(-1.0, [0.0, 0.6, 0.0], 0.6, 0.0)

    def test_b_plus_mu(self):
        """b + mu = -1 with mu = 0.5."""
        with pytest.raises(SpectrumContainsMinusOne):
            cayley_skew_hamiltonian(-1.5, [0.0, 0.5, 0.0], 0.0, 0.0)

    def test_b_minus_mu(self):
        with pytest.raises(SpectrumContainsMinusOne):
            cayley_skew_hamiltonian(-0.5, [0.5, 0.0, 0.0], 0.0, 0.0)

    def test_direct_solve_singular(self):
        with pytest.raises(SpectrumContainsMinusOne, match="singular"):
            cayley_transform_direct(-np.eye(4))
