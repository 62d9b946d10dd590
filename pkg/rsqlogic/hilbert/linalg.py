"""
Dense linear-algebra kernel shared by every other subpackage. All functions are pure and
take or return frozen `StateVector` and `Operator` values.
"""
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np

from ..config import get_effective_tolerances as TOL
from ..errors import DimensionError
from ..errors import HermiticityError
from ..errors import NormalizationError
from ..errors import UnitarityError
from .operators import Operator
from .vectors import StateVector

# Candidates whose residual norm falls below this are skipped during unitary completion
COMPLETION_THRESHOLD = 1e-3


def inner_product(u: StateVector, v: StateVector) -> complex:
    """:returns: `⟨u|v⟩`, conjugate-linear in `u` and linear in `v`."""
    if u.dim != v.dim:
        raise DimensionError(f"Inner product of vectors with dimensions {u.dim} and {v.dim}.")
    return complex(np.vdot(u.amps, v.amps))


def tensor_product(u: StateVector, v: StateVector) -> StateVector:
    """:returns: `u ⊗ v` flattened row-major, `u` being the outer index."""
    if u.is_zero or v.is_zero:
        raise NormalizationError("Tensor product of a zero vector.")
    return StateVector(np.kron(u.amps, v.amps))


def outer_product(u: StateVector, v: StateVector) -> Operator:
    """:returns: `|u⟩⟨v|` with entries `u_k · conj(v_l)`."""
    return Operator(np.outer(u.amps, v.amps.conj()))


def operator_tensor(a: Operator, b: Operator) -> Operator:
    """:returns: `a ⊗ b` with the same flattening convention as `tensor_product`."""
    return a.kron(b)


def hermitian_eigh(m: Operator) -> Tuple[np.ndarray, np.ndarray]:
    """:returns: Eigenvalues in descending order and the matching eigenvectors as columns."""
    values, vectors = np.linalg.eigh(m.hermitian_part())
    order = np.argsort(values)[::-1]
    return values[order], vectors[:, order]


def hermitian_eigenvalues(m: Operator, psd: bool = False) -> List[float]:
    """Real eigenvalues of a Hermitian operator, in descending order.

    :param psd: Require the operator to be positive semi-definite. Eigenvalues down to
    `-herm` are accepted and clamped to zero.
    :raises HermiticityError: If `m` is not Hermitian, or not PSD when `psd` is set.
    """
    values, _ = hermitian_eigh(m)
    if psd:
        if values[-1] < -TOL().herm:
            raise HermiticityError(f"Operator is not positive semi-definite (eigenvalue {values[-1]:.3g}).")
        values = np.clip(values, 0, None)
    return [float(v) for v in values]


def check_orthonormal(vectors: Sequence[StateVector], tolerance: Optional[float] = None) -> None:
    """:raises UnitarityError: If the vectors are not mutually orthonormal within `norm` tolerance."""
    tol = TOL().norm if tolerance is None else tolerance
    if not vectors:
        return
    dims = {v.dim for v in vectors}
    if len(dims) != 1:
        raise DimensionError(f"Vectors with mixed dimensions {sorted(dims)}.")
    columns = np.column_stack([v.amps for v in vectors])
    defect = float(np.max(np.abs(columns.conj().T @ columns - np.eye(len(vectors)))))
    if defect > tol:
        raise UnitarityError(f"Vectors are not orthonormal (Gram defect {defect:.3g}).")


def basis_matrix(basis: Sequence[StateVector]) -> np.ndarray:
    """:returns: The vectors stacked as the columns of a matrix."""
    return np.column_stack([v.amps for v in basis])


def _fix_phase(column: np.ndarray) -> np.ndarray:
    """Rotate the global phase so that the first non-negligible entry is real positive."""
    for entry in column:
        if abs(entry) > TOL().zero:
            return np.asarray(column * (abs(entry) / entry))
    return column


def unitary_completion(isometry_columns: Sequence[StateVector]) -> Operator:
    """Complete orthonormal columns into a square unitary.

    The given vectors become the leading columns. The remaining columns come from
    orthogonalizing the standard basis vectors in increasing order against everything
    accepted so far, each new column having its first non-zero entry made real positive.
    """
    if not isometry_columns:
        raise DimensionError("Unitary completion needs at least one column.")
    check_orthonormal(isometry_columns)
    dim = isometry_columns[0].dim
    columns = [v.amps for v in isometry_columns]

    for k in range(dim):
        if len(columns) == dim:
            break
        candidate = np.zeros(dim, dtype=complex)
        candidate[k] = 1

        # Orthogonalize twice to stay orthogonal to machine precision
        for _ in range(2):
            for column in columns:
                candidate = candidate - np.vdot(column, candidate) * column

        norm = np.linalg.norm(candidate)
        if norm < COMPLETION_THRESHOLD:
            continue
        columns.append(_fix_phase(candidate / norm))

    return Operator(np.column_stack(columns))


def invert_gram(a: Operator) -> Operator:
    """Inverse of a Hermitian PSD Gram matrix, or its spectral pseudo-inverse when
    eigenvalues fall below the `rank` tolerance."""
    values, vectors = hermitian_eigh(a)
    inverted = np.array([1 / v if v > TOL().rank else 0.0 for v in values])
    result = vectors @ np.diag(inverted) @ vectors.conj().T
    return Operator((result + result.conj().T) / 2)


def gram_matrix(vectors: Sequence[StateVector]) -> Operator:
    """:returns: The matrix `A_ij = ⟨v_i|v_j⟩`."""
    columns = basis_matrix(vectors)
    return Operator(columns.conj().T @ columns)
