"""Tests for the skew-Hamiltonian Jordan structure."""

import math

import numpy as np
import pytest

from src.applications.jordan import (
    jordan_block_sizes_from_ranks,
    jordan_skew_hamiltonian,
    skew_hamiltonian_characteristic,
    verify_rank_two,
)
from src.errors import ScalarInput
from src.families import SkewHamiltonianParams
from src.minpoly import characteristic_polynomial

DRAWS = 200


def defective_params(rng):
    """|p|^2 = c^2 + d^2, so mu = 0."""
    p = rng.normal(size=3)
    norm = float(np.linalg.norm(p))
    phi = rng.uniform(0.0, 2.0 * math.pi)
    return SkewHamiltonianParams(rng.normal(), p, norm * math.cos(phi), norm * math.sin(phi))


class TestDefectiveCase:
    def test_two_blocks_of_size_two(self, rng):
        for _ in range(DRAWS):
            params = defective_params(rng)
            report = jordan_skew_hamiltonian(params.b, params.p, params.c, params.d)
            assert report.block_sizes == [2, 2]
            assert not report.diagonalizable
            assert report.mu == 0.0
            assert len(report.eigenvalues) == 1
            assert report.eigenvalues[0].value == complex(params.b)
            assert report.rank_certificate.rank == 2

    def test_rank_certificate_minor(self, rng):
        params = defective_params(rng)
        certificate = verify_rank_two(params.b, params.p, params.c, params.d)
        i, j = certificate.minor_index
        gram = certificate.gram
        assert certificate.minor_value == pytest.approx(
            gram[i, i] * gram[j, j] - gram[i, j] * gram[j, i]
        )
        assert abs(certificate.minor_value) > 0.0
        assert certificate.to_dict()["minor_index"] == [i + 1, j + 1]

    def test_scalar_input(self):
        with pytest.raises(ScalarInput, match="scalar"):
            jordan_skew_hamiltonian(1.0, [0, 0, 0], 0.0, 0.0)
        with pytest.raises(ScalarInput, match="scalar"):
            verify_rank_two(1.0, [0, 0, 0], 0.0, 0.0)


class TestDiagonalizableCase:
    def test_real_eigenvalues(self, rng):
        """mu^2 > 0: b + mu and b - mu, each with two 1x1 blocks."""
        checked = 0
        while checked < DRAWS:
            params = SkewHamiltonianParams(rng.normal(), rng.normal(size=3) + [2.0, 0.0, 0.0], 0.2, -0.1)
            if params.mu2 <= 0.1:
                continue
            report = jordan_skew_hamiltonian(params.b, params.p, params.c, params.d)
            assert report.diagonalizable
            assert report.block_sizes == [1, 1, 1, 1]
            computed = sorted(np.linalg.eigvals(params.matrix()).real)
            mu = math.sqrt(params.mu2)
            expected = sorted([params.b - mu] * 2 + [params.b + mu] * 2)
            assert computed == pytest.approx(expected, abs=1e-8)
            assert report.mu == pytest.approx(mu)
            checked += 1

    def test_complex_pair(self):
        report = jordan_skew_hamiltonian(0.5, [0.1, 0.0, 0.0], 1.0, 0.0)
        assert report.diagonalizable
        assert report.mu is None
        values = sorted((entry.value for entry in report.eigenvalues), key=lambda z: z.imag)
        imag = math.sqrt(1.0 - 0.01)
        assert values[0] == pytest.approx(complex(0.5, -imag))
        assert values[1] == pytest.approx(complex(0.5, imag))
        assert report.notes

    def test_complex_pairs_match_eigvals(self, rng):
        """mu^2 < 0: b +- i sqrt(-mu^2), each with two 1x1 blocks."""
        for _ in range(DRAWS):
            phi = rng.uniform(0.0, 2.0 * math.pi)
            radius = 1.0 + abs(rng.normal())
            params = SkewHamiltonianParams(
                rng.normal(), rng.normal(size=3) * 0.2, radius * math.cos(phi), radius * math.sin(phi)
            )
            report = jordan_skew_hamiltonian(params.b, params.p, params.c, params.d)
            assert report.diagonalizable
            assert report.block_sizes == [1, 1, 1, 1]
            imag = math.sqrt(-params.mu2)
            computed = sorted(np.linalg.eigvals(params.matrix()), key=lambda z: (z.imag, z.real))
            expected = [complex(params.b, -imag)] * 2 + [complex(params.b, imag)] * 2
            assert np.allclose(computed, expected, atol=1e-7)


class TestCharacteristicPolynomial:
    def test_matches_faddeev_leverrier(self, rng):
        for _ in range(DRAWS):
            params = SkewHamiltonianParams(rng.normal(), rng.normal(size=3), rng.normal(), rng.normal())
            closed = skew_hamiltonian_characteristic(params.b, params.mu2)
            reference = characteristic_polynomial(params.matrix())
            assert closed.max_difference(reference) <= 1e-9

    def test_is_square_of_minimal_polynomial(self):
        """(x^2 - 2bx + kappa)^2."""
        b, mu2 = 0.7, 0.3
        closed = skew_hamiltonian_characteristic(b, mu2)
        kappa = b * b - mu2
        expected = np.polynomial.polynomial.polymul([kappa, -2.0 * b, 1.0], [kappa, -2.0 * b, 1.0])
        assert np.allclose(closed.as_array(), expected, atol=1e-14)


class TestBlockCounting:
    def test_single_block(self):
        assert jordan_block_sizes_from_ranks([3, 2, 1, 0], 4) == {4: 1}

    def test_two_blocks_of_two(self):
        assert jordan_block_sizes_from_ranks([2, 0, 0, 0], 4) == {2: 2}

    def test_diagonal(self):
        assert jordan_block_sizes_from_ranks([0, 0, 0, 0], 4) == {1: 4}

    def test_mixed(self):
        """Blocks of sizes 3 and 1 at one eigenvalue."""
        assert jordan_block_sizes_from_ranks([2, 1, 0, 0], 4) == {1: 1, 3: 1}

    def test_wrong_length(self):
        with pytest.raises(ValueError, match="need 4 ranks"):
            jordan_block_sizes_from_ranks([1, 0], 4)
