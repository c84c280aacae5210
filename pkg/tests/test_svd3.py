"""Tests for 3x3 singular values through the symmetric 4x4 image."""

import numpy as np
import pytest
from scipy import linalg
from scipy.spatial.transform import Rotation

from src.applications.svd3 import (
    CASE_ALL_EQUAL,
    CASE_CUBIC_LEADING_PAIR,
    CASE_CUBIC_TRAILING_PAIR,
    CASE_QUARTIC,
    CASE_RANK_ONE,
    CASE_RANK_TWO_EQUAL,
    CASE_RANK_TWO_QUARTIC,
    CASE_ZERO,
    SingularTriple,
    classify_singular_values,
    singular_values_3x3,
    svd3_analysis,
    svd3_eigenvalues,
)
from src.families import SymmetricParams
from src.minpoly import minimal_polynomial_oracle


def with_singular_values(rng, sigma, sign=1.0):
    u = Rotation.random(random_state=rng).as_matrix()
    v = Rotation.random(random_state=rng).as_matrix()
    return sign * u @ np.diag(sigma) @ v.T


class TestAgainstLapack:
    def test_random_matrices(self, rng):
        """Agreement with gesvd to 1e-8 on random inputs."""
        for _ in range(500):
            y = rng.normal(size=(3, 3))
            triple, _ = singular_values_3x3(y)
            reference = linalg.svd(y, compute_uv=False, lapack_driver="gesvd")
            assert np.allclose(triple.as_array(), reference, rtol=0.0, atol=1e-8)
            assert triple.tau == int(np.sign(np.linalg.det(y)))

    def test_scaled_matrices(self, rng):
        for scale in (0.1, 1.0, 1e3):
            y = scale * rng.normal(size=(3, 3))
            triple, _ = singular_values_3x3(y)
            reference = linalg.svd(y, compute_uv=False, lapack_driver="gesvd")
            assert np.allclose(triple.as_array(), reference, rtol=1e-8, atol=1e-12)

    def test_eigenvalue_pattern(self, rng):
        """X's eigenvalues follow the sign pattern of the singular values."""
        y = rng.normal(size=(3, 3))
        report = svd3_analysis(y)
        x = SymmetricParams(0.0, y[:, 0], y[:, 1], y[:, 2]).matrix()
        expected = np.sort(linalg.eigvalsh(x))[::-1]
        assert np.allclose(report.eigenvalues, expected, atol=1e-9)
        pattern = np.sort(svd3_eigenvalues(
            (report.singular.sigma1, report.singular.sigma2, report.singular.sigma3),
            report.singular.tau,
        ))[::-1]
        assert np.allclose(pattern, expected, atol=1e-9)


class TestCases:
    def test_zero(self):
        triple, case = singular_values_3x3(np.zeros((3, 3)))
        assert case == CASE_ZERO
        assert triple.as_array().tolist() == [0.0, 0.0, 0.0]
        assert triple.tau == 0

    def test_identity(self):
        """Y = I: X has minimal polynomial x^2 - 2x - 3."""
        report = svd3_analysis(np.eye(3))
        assert report.case == CASE_ALL_EQUAL
        assert report.singular.as_array() == pytest.approx([1.0, 1.0, 1.0])
        assert report.singular.tau == 1
        assert report.minimal_polynomial.allclose(
            minimal_polynomial_oracle(SymmetricParams(0.0, [1, 0, 0], [0, 1, 0], [0, 0, 1]).matrix())
        )
        assert report.minimal_polynomial.to_list() == pytest.approx([-3.0, -2.0, 1.0])
        assert report.eigenvalues == pytest.approx([3.0, -1.0, -1.0, -1.0])

    def test_rank_one(self, rng):
        y = np.outer(rng.normal(size=3), rng.normal(size=3))
        _, case = singular_values_3x3(y)
        assert case == CASE_RANK_ONE

    def test_rank_two_equal(self, rng):
        _, case = singular_values_3x3(with_singular_values(rng, [2.0, 2.0, 0.0]))
        assert case == CASE_RANK_TWO_EQUAL

    def test_rank_two(self, rng):
        triple, case = singular_values_3x3(with_singular_values(rng, [2.0, 1.0, 0.0]))
        assert case == CASE_RANK_TWO_QUARTIC
        assert triple.as_array() == pytest.approx([2.0, 1.0, 0.0], abs=1e-9)

    @pytest.mark.parametrize("sign", [1.0, -1.0])
    def test_all_equal(self, rng, sign):
        triple, case = singular_values_3x3(with_singular_values(rng, [1.5, 1.5, 1.5], sign))
        assert case == CASE_ALL_EQUAL
        assert triple.tau == int(sign)
        assert triple.as_array() == pytest.approx([1.5, 1.5, 1.5], abs=1e-8)

    def test_leading_pair(self, rng):
        triple, case = singular_values_3x3(with_singular_values(rng, [2.0, 2.0, 0.5]))
        assert case == CASE_CUBIC_LEADING_PAIR
        assert triple.as_array() == pytest.approx([2.0, 2.0, 0.5], abs=1e-8)

    def test_trailing_pair(self, rng):
        triple, case = singular_values_3x3(with_singular_values(rng, [2.0, 0.5, 0.5], -1.0))
        assert case == CASE_CUBIC_TRAILING_PAIR
        assert triple.tau == -1
        assert triple.as_array() == pytest.approx([2.0, 0.5, 0.5], abs=1e-8)

    def test_quartic(self, rng):
        _, case = singular_values_3x3(with_singular_values(rng, [3.0, 2.0, 1.0]))
        assert case == CASE_QUARTIC

    def test_zero_eigenvalue_flag(self, rng):
        """sigma1 = sigma2 + sigma3 with tau = +1 puts 0 in the spectrum."""
        report = svd3_analysis(with_singular_values(rng, [3.0, 2.0, 1.0]))
        assert report.zero_eigenvalue

    def test_rejects_wrong_shape(self):
        with pytest.raises(ValueError, match="3x3"):
            svd3_analysis(np.eye(4))


class TestClassifier:
    def test_ordering_of_rules(self):
        assert classify_singular_values(SingularTriple(0.0, 0.0, 0.0, 0), 1e-9) == CASE_ZERO
        assert classify_singular_values(SingularTriple(1.0, 0.0, 0.0, 0), 1e-9) == CASE_RANK_ONE
        assert classify_singular_values(SingularTriple(1.0, 1.0, 0.0, 0), 1e-9) == CASE_RANK_TWO_EQUAL
        assert classify_singular_values(SingularTriple(1.0, 1.0, 1.0, 1), 1e-9) == CASE_ALL_EQUAL
        assert classify_singular_values(SingularTriple(2.0, 1.0, 0.0, 0), 1e-9) == CASE_RANK_TWO_QUARTIC
        assert classify_singular_values(SingularTriple(2.0, 2.0, 1.0, 1), 1e-9) == CASE_CUBIC_LEADING_PAIR
        assert classify_singular_values(SingularTriple(2.0, 1.0, 1.0, -1), 1e-9) == CASE_CUBIC_TRAILING_PAIR
        assert classify_singular_values(SingularTriple(3.0, 2.0, 1.0, 1), 1e-9) == CASE_QUARTIC

    def test_to_dict(self):
        assert SingularTriple(3.0, 2.0, 1.0, -1).to_dict() == {"sigma": [3.0, 2.0, 1.0], "tau": -1}
