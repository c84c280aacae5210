"""Tests for the H (x) H <-> M(4, R) isomorphism."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from src.algebra.quaternion import Quaternion, quat_mul
from src.algebra.tensor import (
    TensorElement,
    basis_matrix,
    flip_form,
    is_tensor_of,
    matrix_to_tensor,
    product_tensor,
    symplectic_form,
    tensor_conj,
    tensor_mul,
    tensor_sum,
    tensor_to_matrix,
)

coefficient_arrays = arrays(
    np.float64,
    (4, 4),
    elements=st.floats(min_value=-5.0, max_value=5.0, allow_nan=False, allow_infinity=False),
)
unit_arrays = arrays(
    np.float64,
    (4, 4),
    elements=st.floats(min_value=-1.0, max_value=1.0, allow_nan=False, allow_infinity=False),
)


class TestBasis:
    """The sixteen basis matrices."""

    def test_identity_is_one_tensor_one(self):
        assert np.array_equal(basis_matrix(0, 0), np.eye(4))

    def test_basis_is_orthogonal_with_norm_four(self):
        """trace(B_xy^T B_uv) = 4 delta."""
        for x in range(4):
            for y in range(4):
                for u in range(4):
                    for v in range(4):
                        inner = np.trace(basis_matrix(x, y).T @ basis_matrix(u, v))
                        expected = 4.0 if (x, y) == (u, v) else 0.0
                        assert inner == pytest.approx(expected, abs=1e-14)

    def test_basis_matrices_are_signed_permutations(self):
        for x in range(4):
            for y in range(4):
                b = basis_matrix(x, y)
                assert np.allclose(b @ b.T, np.eye(4))
                assert set(np.unique(np.abs(b))) == {0.0, 1.0}

    def test_basis_matrix_is_writable_copy(self):
        b = basis_matrix(1, 2)
        b[0, 0] = 7.0
        assert basis_matrix(1, 2)[0, 0] == 0.0

    def test_index_out_of_range(self):
        with pytest.raises(IndexError, match="0..3"):
            basis_matrix(4, 0)

    def test_symplectic_form(self, j4):
        """M_{1 (x) j} = [[0, I], [-I, 0]]."""
        expected = np.block([[np.zeros((2, 2)), np.eye(2)], [-np.eye(2), np.zeros((2, 2))]])
        assert np.array_equal(j4, expected)
        assert np.array_equal(symplectic_form(), expected)

    def test_flip_form(self, r4):
        """M_{j (x) i} is the anti-diagonal of ones."""
        assert np.array_equal(r4, np.fliplr(np.eye(4)))
        assert np.array_equal(flip_form(), np.fliplr(np.eye(4)))

    def test_product_tensor_acts_as_sandwich(self, rng):
        """M_{p (x) q} h = p h conj(q)."""
        for _ in range(20):
            p, q, h = (Quaternion.from_array(rng.normal(size=4)) for _ in range(3))
            image = product_tensor(p, q).to_matrix() @ h.as_array()
            expected = quat_mul(quat_mul(p, h), q.conj()).as_array()
            assert np.allclose(image, expected, atol=1e-12)


class TestTensorAlgebra:
    @given(coefficient_arrays)
    def test_matrix_round_trip(self, coeffs):
        """tensor_to_matrix and matrix_to_tensor are inverse."""
        element = TensorElement(coeffs)
        back = matrix_to_tensor(tensor_to_matrix(element))
        assert np.allclose(back.coeffs, coeffs, rtol=0.0, atol=1e-12)

    @given(unit_arrays, unit_arrays)
    @settings(max_examples=100)
    def test_product_matches_matrix_product(self, a, b):
        """matrix(ab) = matrix(a) matrix(b)."""
        left, right = TensorElement(a), TensorElement(b)
        product = tensor_mul(left, right).to_matrix()
        assert np.allclose(product, left.to_matrix() @ right.to_matrix(), rtol=0.0, atol=1e-11)

    @given(coefficient_arrays)
    def test_conjugation_is_transpose(self, coeffs):
        element = TensorElement(coeffs)
        assert np.allclose(tensor_conj(element).to_matrix(), element.to_matrix().T, atol=1e-12)

    def test_operator_overloads(self):
        a = TensorElement.unit(1, 2)
        b = TensorElement.unit(2, 3)
        assert (a * b).allclose(tensor_mul(a, b))
        assert (2.0 * a).allclose(a.scaled(2.0))
        assert (a - a).allclose(TensorElement.zero())
        assert (-a + a).allclose(TensorElement.zero())

    def test_scalar_part_is_quarter_trace(self, rng):
        m = rng.normal(size=(4, 4))
        assert matrix_to_tensor(m).scalar_part() == pytest.approx(np.trace(m) / 4.0)

    def test_tensor_sum(self):
        i = Quaternion(0.0, 1.0, 0.0, 0.0)
        j = Quaternion(0.0, 0.0, 1.0, 0.0)
        total = tensor_sum([(i, i), (j, 1.0)])
        assert total.coeffs[1, 1] == 1.0
        assert total.coeffs[2, 0] == 1.0
        assert np.count_nonzero(total.coeffs) == 2

    def test_coefficients_are_read_only(self):
        element = TensorElement.zero()
        with pytest.raises(ValueError):
            element.coeffs[0, 0] = 1.0

    def test_rejects_wrong_shape(self):
        with pytest.raises(ValueError, match="4x4"):
            TensorElement(np.zeros((3, 3)))
        with pytest.raises(ValueError, match="4x4"):
            matrix_to_tensor(np.zeros((3, 4)))

    def test_is_tensor_of(self, rng):
        m = rng.normal(size=(4, 4))
        element = matrix_to_tensor(m)
        assert is_tensor_of(m, element)
        assert not is_tensor_of(m + 1e-3, element)

    def test_repr_lists_terms(self):
        assert repr(TensorElement.unit(0, 2, 3.0)) == "TensorElement(+3 1(x)j)"
        assert repr(TensorElement.zero()) == "TensorElement(0)"
