import numpy as np
import pytest
from rsqlogic.errors import DimensionError
from rsqlogic.errors import HermiticityError
from rsqlogic.errors import NormalizationError
from rsqlogic.errors import UnitarityError
from rsqlogic.hilbert import check_orthonormal
from rsqlogic.hilbert import gram_matrix
from rsqlogic.hilbert import hermitian_eigenvalues
from rsqlogic.hilbert import inner_product
from rsqlogic.hilbert import invert_gram
from rsqlogic.hilbert import normalize
from rsqlogic.hilbert import Operator
from rsqlogic.hilbert import operator_tensor
from rsqlogic.hilbert import outer_product
from rsqlogic.hilbert import random_state
from rsqlogic.hilbert import random_unitary
from rsqlogic.hilbert import StateVector
from rsqlogic.hilbert import tensor_product
from rsqlogic.hilbert import unitary_completion


def test_state_validation() -> None:
    """States must be normalized, finite and one-dimensional; zero is the only exception."""
    with pytest.raises(NormalizationError):
        StateVector(np.array([1.0, 1.0]))
    with pytest.raises(NormalizationError):
        StateVector(np.array([np.nan, 1.0]))
    with pytest.raises(DimensionError):
        StateVector(np.eye(2))
    assert StateVector.zero(3).is_zero


def test_state_is_frozen() -> None:
    """Amplitudes are copied and cannot be modified in place."""
    amps = np.array([1.0, 0.0])
    state = StateVector(amps)
    amps[0] = 5
    assert state.amps[0] == 1
    with pytest.raises(ValueError):
        state.amps[0] = 0


def test_normalize() -> None:
    """`normalize` rescales to unit norm and refuses the zero vector."""
    state = normalize(np.array([3.0, 4.0j]))
    assert np.allclose(state.amps, [0.6, 0.8j])
    assert StateVector.from_list([1, 1]).amps[0] == pytest.approx(1 / np.sqrt(2))
    with pytest.raises(NormalizationError):
        normalize(np.zeros(2))


def test_products() -> None:
    """Tensor products flatten with the first factor as the outer index."""
    e0, e1 = StateVector.basis(2, 0), StateVector.basis(2, 1)
    assert np.allclose(tensor_product(e0, e1).amps, [0, 1, 0, 0])
    assert inner_product(e0, e1) == 0
    assert np.allclose(outer_product(e1, e0).entries, [[0, 0], [1, 0]])
    with pytest.raises(NormalizationError):
        tensor_product(StateVector.zero(2), e0)


def test_operator_algebra() -> None:
    """Products, sums, adjoints and tensor products behave like the underlying matrices."""
    x = Operator(np.array([[0, 1], [1, 0]]))
    y = Operator(np.array([[0, -1j], [1j, 0]]))
    assert (x @ x).distance(Operator.identity(2)) == 0
    assert (x @ y - y @ x).distance(2j * Operator(np.diag([1, -1]))) < 1e-15
    assert y.dagger.distance(y) == 0
    assert x.kron(Operator.identity(3)).rows == 6
    assert x.is_unitary() and x.is_hermitian()
    assert not x.commutes_with(y)
    with pytest.raises(DimensionError):
        x @ Operator.identity(3)


def test_hermitian_part() -> None:
    """Non-Hermitian operators are rejected where a spectrum is needed."""
    with pytest.raises(HermiticityError):
        Operator(np.array([[0, 1], [0, 0]])).hermitian_part()


def test_hermitian_eigenvalues() -> None:
    """Eigenvalues come in descending order, and PSD is enforced when asked."""
    m = Operator(np.diag([0.2, 1.0, -0.5]))
    assert hermitian_eigenvalues(m) == pytest.approx([1.0, 0.2, -0.5])
    with pytest.raises(HermiticityError):
        hermitian_eigenvalues(m, psd=True)


def test_check_orthonormal() -> None:
    """Non-orthogonal families are reported as unitarity errors."""
    e0 = StateVector.basis(2, 0)
    plus = StateVector.from_list([1, 1])
    check_orthonormal([e0, StateVector.basis(2, 1)])
    with pytest.raises(UnitarityError):
        check_orthonormal([e0, plus])


def test_unitary_completion() -> None:
    """Given columns come first and the rest of the standard basis fills in, in order."""
    completed = unitary_completion([StateVector.basis(2, 1)])
    assert np.allclose(completed.entries, [[0, 1], [1, 0]])

    plus = StateVector.from_list([1, 1, 0])
    u = unitary_completion([plus])
    assert u.is_unitary()
    assert np.allclose(u.entries[:, 0], plus.amps)

    # First non-negligible entry of every added column is real positive
    for k in range(1, 3):
        column = u.entries[:, k]
        first = column[np.abs(column) > 1e-12][0]
        assert first.imag == pytest.approx(0) and first.real > 0


def test_unitary_completion_is_deterministic(rng: np.random.Generator) -> None:
    """Completing the same columns twice gives the same unitary."""
    state = random_state(rng, 4)
    assert unitary_completion([state]).distance(unitary_completion([state])) == 0


def test_invert_gram() -> None:
    """Invertible Gram matrices are inverted, singular ones pseudo-inverted."""
    e0 = StateVector.basis(2, 0)
    tilted = StateVector.from_list([1, 1])
    gram = gram_matrix([e0, tilted])
    assert np.allclose(invert_gram(gram).entries @ gram.entries, np.eye(2))

    singular = gram_matrix([e0, e0])
    assert np.allclose(invert_gram(singular).entries, np.full((2, 2), 0.25))


def test_invert_gram_closed_form() -> None:
    """Two unit vectors at 45° have the Gram inverse `[[2, -√2], [-√2, 2]]`."""
    gram = Operator(np.array([[1, 1 / np.sqrt(2)], [1 / np.sqrt(2), 1]]))
    expected = np.array([[2, -np.sqrt(2)], [-np.sqrt(2), 2]])
    assert np.allclose(invert_gram(gram).entries, expected, atol=1e-12)


def test_pseudo_inverse_law(rng: np.random.Generator) -> None:
    """`G A G = G` and `A G A = A` for random PSD matrices, rank-deficient ones included."""
    for _ in range(50):
        dim = int(rng.integers(1, 9))
        rank = int(rng.integers(1, dim + 1))
        columns = random_unitary(rng, dim).entries[:, :rank]
        weights = rng.uniform(0.5, 2.0, size=rank)
        a = Operator(columns @ np.diag(weights) @ columns.conj().T)
        g = invert_gram(a)
        assert (g @ a @ g).distance(g) < 1e-8
        assert (a @ g @ a).distance(a) < 1e-8


def test_eigenvalues_sum_to_trace(rng: np.random.Generator) -> None:
    """Eigenvalues of random Hermitian matrices come out descending and add up to the trace."""
    for dim in range(1, 17):
        raw = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        m = Operator((raw + raw.conj().T) / 2)
        values = hermitian_eigenvalues(m)
        assert sum(values) == pytest.approx(m.trace().real, abs=1e-9)
        assert values == sorted(values, reverse=True)


def test_operator_tensor(rng: np.random.Generator) -> None:
    """`(A ⊗ B)(u ⊗ v) = Au ⊗ Bv` under the same flattening as `tensor_product`."""
    a, b = random_unitary(rng, 2), random_unitary(rng, 3)
    u, v = random_state(rng, 2), random_state(rng, 3)
    joint = operator_tensor(a, b)

    expected = tensor_product(StateVector(a.apply(u)), StateVector(b.apply(v)))
    assert np.allclose(joint.apply(tensor_product(u, v)), expected.amps)
    assert joint.distance(a.kron(b)) == 0
    assert operator_tensor(Operator.identity(2), Operator.identity(3)).distance(Operator.identity(6)) == 0


def test_random_generators(rng: np.random.Generator) -> None:
    """Random states are normalized and random unitaries unitary, reproducibly per seed."""
    assert random_unitary(rng, 5).is_unitary()
    assert random_state(rng, 5).dim == 5

    first = random_state(np.random.default_rng(7), 3)
    second = random_state(np.random.default_rng(7), 3)
    assert np.array_equal(first.amps, second.amps)
