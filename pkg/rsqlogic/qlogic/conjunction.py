"""
Ordered conjunction of conjugate propositions. The proposition on the left of `∧` is
projected first, so `P(φ_i ∧ χ_j)` and `P(χ_j ∧ φ_i)` generally differ.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict
from typing import Sequence
from typing import Tuple

import numpy as np

from ..config import get_effective_tolerances as TOL
from ..errors import DimensionError
from ..errors import HermiticityError
from ..errors import LabelError
from ..errors import UnitarityError
from ..hilbert import basis_matrix
from ..hilbert import check_orthonormal
from ..hilbert import hermitian_eigenvalues
from ..hilbert import Operator
from ..hilbert import outer_product
from ..hilbert import StateVector
from ..measures import relative_state_probability
from ..relstate import decompose
from ..relstate import PartialRelativeFamily
from ..relstate import two_stage_state

# Tolerance of the product identity P(φ∧χ)P(χ) = P(χ∧φ)P(φ)
IDENTITY_TOLERANCE = 1e-10


class Order(Enum):
    """Which basis of a `ConjugatePair` is measured first."""

    F_FIRST = "phi-first"
    X_FIRST = "chi-first"


@dataclass(frozen=True, eq=False)
class ConjugatePair:
    """Two orthonormal bases `{φ_i}` and `{χ_j}` of the same system space.

    :param basis_f: The basis `φ`, complete and orthonormal.
    :param basis_x: The basis `χ`, complete and orthonormal.
    """

    basis_f: Tuple[StateVector, ...]
    basis_x: Tuple[StateVector, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "basis_f", tuple(self.basis_f))
        object.__setattr__(self, "basis_x", tuple(self.basis_x))
        for basis in (self.basis_f, self.basis_x):
            check_orthonormal(basis)
            if not basis or len(basis) != basis[0].dim:
                raise UnitarityError("Both bases of a conjugate pair must be complete.")
        if self.basis_f[0].dim != self.basis_x[0].dim:
            raise DimensionError("Both bases of a conjugate pair must span the same space.")

    @property
    def dim(self) -> int:
        return len(self.basis_f)

    @property
    def transition(self) -> np.ndarray:
        """:returns: The unitary overlap matrix `T[j, i] = ⟨χ_j|φ_i⟩`."""
        return np.asarray(basis_matrix(self.basis_x).conj().T @ basis_matrix(self.basis_f))

    @property
    def is_strictly_conjugate(self) -> bool:
        """:returns: True if every `|⟨χ_j|φ_i⟩|²` lies strictly between 0 and 1."""
        overlaps = np.abs(self.transition) ** 2
        return bool(np.all(overlaps > TOL().truth) and np.all(overlaps < 1 - TOL().truth))

    def reversed(self) -> "ConjugatePair":
        """:returns: The same pair with the roles of `φ` and `χ` swapped."""
        return ConjugatePair(self.basis_x, self.basis_f)

    def check_indices(self, i: int, j: int) -> None:
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise LabelError(f"Indices ({i}, {j}) out of range for a {self.dim}-dim conjugate pair.")

    @staticmethod
    def qubit_zx() -> "ConjugatePair":
        """:returns: The spin-1/2 pair `φ = (↑z, ↓z)`, `χ = (↑x, ↓x)`."""
        up_z, down_z = StateVector.basis(2, 0), StateVector.basis(2, 1)
        up_x = StateVector(np.array([1, 1]) / np.sqrt(2))
        down_x = StateVector(np.array([1, -1]) / np.sqrt(2))
        return ConjugatePair((up_z, down_z), (up_x, down_x))

    @staticmethod
    def fourier(dim: int) -> "ConjugatePair":
        """:returns: The standard basis paired with the discrete Fourier basis (mutually unbiased)."""
        k = np.arange(dim)
        dft = np.exp(2j * np.pi * np.outer(k, k) / dim) / np.sqrt(dim)
        standard = tuple(StateVector.basis(dim, n) for n in range(dim))
        return ConjugatePair(standard, tuple(StateVector(dft[:, n]) for n in range(dim)))


def _oriented(pair: ConjugatePair, i: int, j: int, order: Order) -> Tuple[ConjugatePair, int, int]:
    """:returns: The pair with the first-measured basis as `basis_f`, and the matching indices."""
    pair.check_indices(i, j)
    return (pair, i, j) if order == Order.F_FIRST else (pair.reversed(), j, i)


def conjunction_probability(psi0: StateVector, pair: ConjugatePair, i: int, j: int, order: Order = Order.F_FIRST) -> float:
    """Probability of finding `φ_i` then `χ_j` (`F_FIRST`) or `χ_j` then `φ_i` (`X_FIRST`).

    :returns: `|⟨second|first⟩|² · |⟨first|ψ₀⟩|²`.
    """
    oriented, a, b = _oriented(pair, i, j, order)
    if psi0.dim != pair.dim:
        raise DimensionError(f"Initial state of dimension {psi0.dim} for a {pair.dim}-dim pair.")
    first, second = oriented.basis_f[a], oriented.basis_x[b]
    return float(abs(np.vdot(second.amps, first.amps)) ** 2 * abs(np.vdot(first.amps, psi0.amps)) ** 2)


def _check_overlaps(env_overlaps: Operator, size: int) -> None:
    """Require a valid Gram matrix of normalized vectors: Hermitian, PSD, unit diagonal."""
    if env_overlaps.entries.shape != (size, size):
        raise DimensionError(f"Environment overlaps must be {size}×{size}, got {env_overlaps.entries.shape}.")
    hermitian_eigenvalues(env_overlaps, psd=True)
    if np.max(np.abs(np.diagonal(env_overlaps.entries) - 1)) > TOL().herm:
        raise HermiticityError("Environment overlaps must have a unit diagonal (normalized relative states).")


def conjunction_povm_element(
    pair: ConjugatePair,
    i: int,
    j: int,
    env_overlaps: Operator,
    order: Order = Order.F_FIRST,
) -> Operator:
    """System-space element `F_ji = V† Π_ji V` of the conjunction `φ_i ∧ χ_j`.

    `V = Σ_ij |R_ji⟩|χ_j⟩⟨χ_j|φ_i⟩⟨φ_i|` and `Π_ji = I_S ⊗ |R_ji⟩⟨R_ji|`. Only the overlaps
    `⟨R_j'i'|R_ji⟩` of the partial relative states enter, so they are given as a Gram matrix
    indexed by `j · dim + i`. The element then reads `Σ_j' |w_j'⟩⟨w_j'|` with
    `w_j' = Σ_i' |φ_i'⟩⟨φ_i'|χ_j'⟩⟨R_j'i'|R_ji⟩`.

    With `order = X_FIRST`, `χ` is measured first and the overlaps are indexed by `i · dim + j`.
    """
    oriented, a, b = _oriented(pair, i, j, order)
    n = pair.dim
    _check_overlaps(env_overlaps, n * n)

    transition = oriented.transition
    column = env_overlaps.entries[:, b * n + a].reshape(n, n)
    coefficients = transition.conj() * column
    w = basis_matrix(oriented.basis_f) @ coefficients.T
    element = w @ w.conj().T
    return Operator((element + element.conj().T) / 2)


def conjunction_povm(
    pair: ConjugatePair,
    env_overlaps: Operator,
    order: Order = Order.F_FIRST,
) -> Dict[Tuple[int, int], Operator]:
    """:returns: Every conjunction element keyed by `(i, j)`. They sum to `I_S` when the
    partial relative states are mutually orthogonal."""
    return {
        (i, j): conjunction_povm_element(pair, i, j, env_overlaps, order)
        for j in range(pair.dim)
        for i in range(pair.dim)
    }


def orthogonal_records(dim: int) -> Sequence[Sequence[StateVector]]:
    """:returns: `R_ji = e_{j·dim+i}`, mutually orthogonal records in a `dim²`-dim environment."""
    return [[StateVector.basis(dim * dim, j * dim + i) for i in range(dim)] for j in range(dim)]


def dilated_conjunction_probability(
    psi0: StateVector,
    pair: ConjugatePair,
    i: int,
    j: int,
    order: Order = Order.F_FIRST,
) -> float:
    """Same probability as `conjunction_probability`, computed on the joint space.

    The two-stage state is assembled with orthogonal records and the joint projector
    `I_S ⊗ |R_ji⟩⟨R_ji|` is measured on it in relative-state form, `Σ_k |a_k|² |⟨R_ji|R_k⟩|²`,
    which never materializes the joint-space operator.
    """
    oriented, a, b = _oriented(pair, i, j, order)
    n = pair.dim
    records = orthogonal_records(n)
    family = PartialRelativeFamily.from_bases(oriented.basis_f, oriented.basis_x, psi0, records)
    joint = two_stage_state(family, oriented.basis_x)
    record = records[b][a]
    return relative_state_probability(decompose(joint, oriented.basis_x), outer_product(record, record))


def conjunction_identity_check(psi0: StateVector, pair: ConjugatePair, i: int, j: int) -> bool:
    """Check `P(φ_i ∧ χ_j) P(χ_j) = P(χ_j ∧ φ_i) P(φ_i)`."""
    pair.check_indices(i, j)
    p_f = abs(np.vdot(pair.basis_f[i].amps, psi0.amps)) ** 2
    p_x = abs(np.vdot(pair.basis_x[j].amps, psi0.amps)) ** 2
    lhs = conjunction_probability(psi0, pair, i, j, Order.F_FIRST) * p_x
    rhs = conjunction_probability(psi0, pair, i, j, Order.X_FIRST) * p_f
    return bool(abs(lhs - rhs) < IDENTITY_TOLERANCE)
