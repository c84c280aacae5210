from .quaternion import (
    Quaternion,
    PureQuaternion,
    ONE,
    I_UNIT,
    J_UNIT,
    K_UNIT,
    ZERO_VECTOR,
    as_vector,
    as_quaternion,
    quat_mul,
    pure_mul,
    vector_triple,
)
from .tensor import (
    TensorElement,
    basis_matrix,
    symplectic_form,
    flip_form,
    tensor_to_matrix,
    matrix_to_tensor,
    tensor_mul,
    tensor_conj,
    product_tensor,
    tensor_sum,
    is_tensor_of,
)

__all__ = [
    "Quaternion",
    "PureQuaternion",
    "ONE",
    "I_UNIT",
    "J_UNIT",
    "K_UNIT",
    "ZERO_VECTOR",
    "as_vector",
    "as_quaternion",
    "quat_mul",
    "pure_mul",
    "vector_triple",
    "TensorElement",
    "basis_matrix",
    "symplectic_form",
    "flip_form",
    "tensor_to_matrix",
    "matrix_to_tensor",
    "tensor_mul",
    "tensor_conj",
    "product_tensor",
    "tensor_sum",
    "is_tensor_of",
]
