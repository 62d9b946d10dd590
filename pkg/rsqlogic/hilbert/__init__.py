"""
Dense complex linear algebra on which every other subpackage builds.

- `StateVector` holds normalized amplitudes (or the distinguished zero state).
- `Operator` holds a dense matrix with helpers for adjoints, products and diagnostics.
- `linalg` provides inner, outer and tensor products, Hermitian eigenvalues, deterministic
unitary completion and Gram-matrix (pseudo-)inversion.
"""
# flake8: noqa
from .linalg import basis_matrix
from .linalg import check_orthonormal
from .linalg import gram_matrix
from .linalg import hermitian_eigenvalues
from .linalg import hermitian_eigh
from .linalg import inner_product
from .linalg import invert_gram
from .linalg import operator_tensor
from .linalg import outer_product
from .linalg import tensor_product
from .linalg import unitary_completion
from .operators import Operator
from .random import random_state
from .random import random_unitary
from .vectors import normalize
from .vectors import StateVector
