import numpy as np
import pytest
from rsqlogic.errors import DimensionError
from rsqlogic.errors import LabelError
from rsqlogic.errors import NormalizationError
from rsqlogic.hilbert import Operator
from rsqlogic.hilbert import random_state
from rsqlogic.hilbert import random_unitary
from rsqlogic.hilbert import StateVector
from rsqlogic.hilbert import tensor_product
from rsqlogic.qlogic import ConjugatePair
from rsqlogic.qlogic import orthogonal_records
from rsqlogic.relstate import BipartiteState
from rsqlogic.relstate import decompose
from rsqlogic.relstate import entanglement_entropy
from rsqlogic.relstate import entropy_symmetry_check
from rsqlogic.relstate import evolve
from rsqlogic.relstate import PartialRelativeFamily
from rsqlogic.relstate import premeasurement_unitary
from rsqlogic.relstate import reduced_density_environment
from rsqlogic.relstate import reduced_density_system
from rsqlogic.relstate import two_stage_state

STANDARD = [StateVector.basis(2, 0), StateVector.basis(2, 1)]


def bell() -> BipartiteState:
    return BipartiteState(np.eye(2) / np.sqrt(2))


def test_bipartite_validation() -> None:
    """Joint amplitudes must be a normalized matrix."""
    with pytest.raises(NormalizationError):
        BipartiteState(np.eye(2))
    with pytest.raises(DimensionError):
        BipartiteState(np.array([1.0]))
    state = BipartiteState.product(StateVector.basis(2, 1), StateVector.basis(3, 2))
    assert (state.dim_s, state.dim_e, state.joint_dim) == (2, 3, 6)
    assert state.to_vector().amps[5] == 1


def test_decompose_bell() -> None:
    """A Bell-like state has equal weights and orthogonal relative states."""
    decomp = decompose(bell(), STANDARD)
    assert decomp.weights == pytest.approx([1 / np.sqrt(2)] * 2)
    assert np.allclose(decomp.rel_state(0).amps, [1, 0])
    assert decomp.overlap(0, 1) == 0
    assert np.allclose(decomp.reassemble().amps, bell().amps)


def test_decompose_in_another_basis(zx: ConjugatePair, rng: np.random.Generator) -> None:
    """Any orthonormal basis reassembles the original state."""
    state = BipartiteState.from_vector(random_state(rng, 6), 2, 3)
    decomp = decompose(state, zx.basis_x)
    assert np.allclose(decomp.reassemble().amps, state.amps, atol=1e-12)
    assert float(np.sum(decomp.weights**2)) == pytest.approx(1)


def test_undefined_relative_state() -> None:
    """A zero amplitude leaves its relative state undefined."""
    state = BipartiteState.product(StateVector.basis(2, 0), StateVector.from_list([1, 1]))
    decomp = decompose(state, STANDARD)
    assert list(decomp.defined_mask) == [True, False]
    with pytest.raises(LabelError):
        decomp.rel_state(1)
    with pytest.raises(LabelError):
        decomp.rel_state(2)


def test_entropy_values() -> None:
    """Product states carry no entanglement, Bell-like states one bit."""
    product = BipartiteState.product(StateVector.basis(2, 0), StateVector.basis(2, 1))
    assert entanglement_entropy(reduced_density_system(product)) < 1e-9
    assert entanglement_entropy(reduced_density_system(bell())) == pytest.approx(1, abs=1e-9)

    skewed = BipartiteState(np.diag([np.sqrt(0.8), np.sqrt(0.2)]))
    assert entanglement_entropy(reduced_density_system(skewed)) == pytest.approx(0.721928, abs=1e-6)


def test_entropy_symmetry(rng: np.random.Generator) -> None:
    """Both reduced states of a pure bipartite state have the same entropy."""
    for _ in range(100):
        dim_s, dim_e = int(rng.integers(2, 5)), int(rng.integers(2, 5))
        state = BipartiteState.from_vector(random_state(rng, dim_s * dim_e), dim_s, dim_e)
        s_system, s_environment = entropy_symmetry_check(state)
        assert abs(s_system - s_environment) < 1e-9
        assert reduced_density_environment(state).dim == dim_e


def test_premeasurement() -> None:
    """The premeasurement maps `φ_i ⊗ R₀` to `φ_i ⊗ R_i`, even for overlapping targets."""
    ready = StateVector.basis(3, 0)
    targets = [ready, StateVector(np.array([0.5, np.sqrt(0.75), 0]))]
    unitary = premeasurement_unitary(STANDARD, targets, ready)

    assert unitary.is_unitary()
    for phi, target in zip(STANDARD, targets):
        assert np.allclose(unitary.apply(tensor_product(phi, ready)), tensor_product(phi, target).amps)


def test_premeasurement_identity() -> None:
    """Targets equal to the ready state leave everything unchanged."""
    ready = StateVector.basis(2, 0)
    unitary = premeasurement_unitary(STANDARD, [ready, ready], ready)
    assert unitary.distance(Operator.identity(4)) < 1e-12


def test_evolve_entangles() -> None:
    """Orthogonal targets turn a superposition into a Bell-like state."""
    ready = StateVector.basis(2, 0)
    unitary = premeasurement_unitary(STANDARD, STANDARD, ready)
    joint = evolve(StateVector.from_list([1, 1]), ready, unitary)
    assert np.allclose(joint.amps, bell().amps)
    with pytest.raises(DimensionError):
        evolve(StateVector.basis(3, 0), ready, unitary)


def test_two_stage_state(zx: ConjugatePair) -> None:
    """Orthogonal records give a normalized joint state and an identity Gram matrix."""
    family = PartialRelativeFamily.from_bases(zx.basis_f, zx.basis_x, zx.basis_f[0], orthogonal_records(2))
    assert family.overlaps().distance(Operator.identity(4)) < 1e-12

    joint = two_stage_state(family, zx.basis_x)
    assert joint.dim_e == 4
    # Only ↑z is populated, then split evenly between ↑x ⊗ R₀₀ and ↓x ⊗ R₁₀
    assert np.allclose(joint.amps, [[0.5, 0, 0.5, 0], [0.5, 0, -0.5, 0]])


def test_two_stage_state_rejects_bad_records(zx: ConjugatePair) -> None:
    """Records that do not yield a normalized joint state are refused."""
    e0, minus_e0 = StateVector.basis(2, 0), StateVector(np.array([-1.0, 0.0]))
    cancelling = [[e0, minus_e0], [e0, e0]]
    family = PartialRelativeFamily.from_bases(zx.basis_f, zx.basis_x, zx.basis_x[0], cancelling)
    with pytest.raises(NormalizationError):
        two_stage_state(family, zx.basis_x)


def test_decompose_reassembles_random_states(rng: np.random.Generator) -> None:
    """Decomposing in a random basis and summing back returns the joint state, up to 8×8."""
    for _ in range(40):
        dim_s, dim_e = int(rng.integers(1, 9)), int(rng.integers(1, 9))
        state = BipartiteState.from_vector(random_state(rng, dim_s * dim_e), dim_s, dim_e)
        unitary = random_unitary(rng, dim_s).entries
        decomp = decompose(state, [StateVector(unitary[:, k]) for k in range(dim_s)])
        assert np.allclose(decomp.reassemble().amps, state.amps, atol=1e-10)
        assert float(np.sum(decomp.weights**2)) == pytest.approx(1, abs=1e-10)


def test_orthogonal_records_decohere_system(rng: np.random.Generator) -> None:
    """Orthogonal relative states leave a diagonal reduced state with eigenvalues `|a_i|²`."""
    weights = random_state(rng, 3).amps
    records = random_unitary(rng, 4).entries[:, :3]
    state = BipartiteState(np.array([weights[i] * records[:, i] for i in range(3)]))

    rho = reduced_density_system(state)
    assert np.allclose(rho.entries, np.diag(np.abs(weights) ** 2), atol=1e-12)
    assert rho.eigenvalues() == pytest.approx(sorted(np.abs(weights) ** 2, reverse=True), abs=1e-12)
    basis = [StateVector.basis(3, i) for i in range(3)]
    assert decompose(state, basis).weights == pytest.approx(np.abs(weights), abs=1e-12)


def test_entropy_invariant_under_environment_unitary(rng: np.random.Generator) -> None:
    """Acting with `I_S ⊗ W` on the environment leaves the entanglement entropy unchanged."""
    for _ in range(20):
        state = BipartiteState.from_vector(random_state(rng, 12), 3, 4)
        rotated = BipartiteState(state.amps @ random_unitary(rng, 4).entries.T)
        before = entanglement_entropy(reduced_density_system(state))
        assert entanglement_entropy(reduced_density_system(rotated)) == pytest.approx(before, abs=1e-9)
        assert entanglement_entropy(reduced_density_environment(rotated)) == pytest.approx(before, abs=1e-9)


def test_two_stage_state_without_first_stage_records(zx: ConjugatePair, rng: np.random.Generator) -> None:
    """Records that ignore the first outcome collapse to a single premeasurement in the second basis."""
    psi0 = random_state(rng, 2)
    records = [random_state(rng, 3), random_state(rng, 3)]
    family = PartialRelativeFamily.from_bases(zx.basis_f, zx.basis_x, psi0, [[r, r] for r in records])
    joint = two_stage_state(family, zx.basis_x)

    ready = StateVector.basis(3, 0)
    single = evolve(psi0, ready, premeasurement_unitary(zx.basis_x, records, ready))
    assert np.allclose(joint.amps, single.amps, atol=1e-12)
