import numpy as np
import pytest
from rsqlogic.errors import DimensionError
from rsqlogic.errors import HermiticityError
from rsqlogic.errors import LabelError
from rsqlogic.errors import NormalizationError
from rsqlogic.errors import UnitarityError
from rsqlogic.hilbert import Operator
from rsqlogic.hilbert import operator_tensor
from rsqlogic.hilbert import outer_product
from rsqlogic.hilbert import random_state
from rsqlogic.hilbert import random_unitary
from rsqlogic.hilbert import StateVector
from rsqlogic.hilbert import tensor_product
from rsqlogic.lattice import span
from rsqlogic.measures import born_probability
from rsqlogic.measures import check_projector
from rsqlogic.measures import DensityMatrix
from rsqlogic.measures import element_complement
from rsqlogic.measures import element_product
from rsqlogic.measures import element_union
from rsqlogic.measures import general_projector
from rsqlogic.measures import matrix_element
from rsqlogic.measures import naimark_compress
from rsqlogic.measures import Povm
from rsqlogic.measures import Pvm
from rsqlogic.measures import pvm_from_basis
from rsqlogic.measures import relative_state_probability
from rsqlogic.qlogic import ConjugatePair
from rsqlogic.relstate import BipartiteState
from rsqlogic.relstate import decompose
from rsqlogic.relstate import premeasurement_unitary


def test_born_pure_and_mixed(zx: ConjugatePair) -> None:
    """Pure states and their density matrices give the same probabilities."""
    up_x = zx.basis_x[0]
    element = outer_product(zx.basis_f[0], zx.basis_f[0])
    assert born_probability(up_x, element) == pytest.approx(0.5)
    assert born_probability(DensityMatrix.from_state(up_x), element) == pytest.approx(0.5)


def test_born_rejects_invalid_elements() -> None:
    """Elements must be effects of the right dimension."""
    state = StateVector.basis(2, 0)
    with pytest.raises(HermiticityError):
        born_probability(state, Operator(np.diag([2.0, 0.0])))
    with pytest.raises(DimensionError):
        born_probability(state, Operator.identity(3))


def test_matrix_element(zx: ConjugatePair) -> None:
    """`⟨ξ|Π|η⟩` is returned as is, complex values included."""
    up_z, down_z = zx.basis_f
    flip = Operator(np.array([[0, 1j], [0, 0]]))
    assert matrix_element(up_z, flip, down_z) == pytest.approx(1j)


def test_density_matrix_validation() -> None:
    """Density matrices are Hermitian, PSD and of unit trace."""
    with pytest.raises(NormalizationError):
        DensityMatrix(Operator(np.diag([0.5, 0.2])))
    with pytest.raises(HermiticityError):
        DensityMatrix(Operator(np.diag([1.5, -0.5])))
    mixed = DensityMatrix(Operator(np.diag([0.5, 0.5])))
    assert mixed.purity() == pytest.approx(0.5)
    assert mixed.eigenvalues() == pytest.approx([0.5, 0.5])


def test_general_projector_limits(zx: ConjugatePair) -> None:
    """Orthonormal vectors give `Σ |φ⟩⟨φ|`, identical vectors a rank-1 projector."""
    up_z, down_z = zx.basis_f
    assert general_projector([up_z, down_z]).distance(Operator.identity(2)) < 1e-12
    assert general_projector([up_z, up_z]).distance(outer_product(up_z, up_z)) < 1e-12
    with pytest.raises(NormalizationError):
        general_projector([])


def test_general_projector_half_overlap() -> None:
    """Two vectors at overlap 0.5 span a plane whose projector fixes both."""
    r1 = StateVector.basis(3, 0)
    r2 = StateVector(np.array([0.5, np.sqrt(0.75), 0]))
    projector = general_projector([r1, r2])

    assert check_projector(projector).is_projector
    for r in (r1, r2):
        assert np.allclose(projector.apply(r), r.amps, atol=1e-12)
    assert projector.trace().real == pytest.approx(2)


def test_general_projector_random_families(rng: np.random.Generator) -> None:
    """Random non-orthogonal families: projector onto their span, equal to a Gram–Schmidt oracle."""
    for _ in range(200):
        count = int(rng.integers(1, 7))
        vectors = [random_state(rng, 8) for _ in range(count)]
        projector = general_projector(vectors)

        diagnostics = check_projector(projector)
        assert diagnostics.hermiticity_defect < 1e-9
        assert diagnostics.idempotency_defect < 1e-9
        for v in vectors:
            assert np.max(np.abs(projector.apply(v) - v.amps)) < 1e-9
        assert projector.distance(span(vectors, 8).projector) < 1e-9


def test_check_projector_negative_control(zx: ConjugatePair) -> None:
    """The product of projectors onto conjugate states is neither self-adjoint nor idempotent."""
    product = outer_product(zx.basis_x[0], zx.basis_x[0]) @ outer_product(zx.basis_f[0], zx.basis_f[0])
    diagnostics = check_projector(product)

    assert not diagnostics.is_projector
    assert diagnostics.hermiticity_defect > 0.1
    assert diagnostics.idempotency_defect > 0.1


def test_pvm_from_basis(zx: ConjugatePair) -> None:
    """Elements are labelled by unions of cells; labels splitting a cell are refused."""
    basis = [StateVector.basis(4, i) for i in range(4)]
    pvm = pvm_from_basis(basis, [{0, 1}, {2}, {3}])

    assert pvm.element({0, 1, 2, 3}).distance(Operator.identity(4)) == 0
    assert pvm.element(set()).distance(Operator.zero(4)) == 0
    assert pvm.element({0, 1, 3}).trace().real == pytest.approx(3)
    with pytest.raises(LabelError):
        pvm.element({0})
    with pytest.raises(LabelError):
        pvm.element({7})
    with pytest.raises(LabelError):
        pvm_from_basis(basis, [{0, 1}, {1, 2, 3}])
    with pytest.raises(UnitarityError):
        pvm_from_basis([zx.basis_f[0], zx.basis_x[0]], [{0}, {1}])


def test_pvm_rules() -> None:
    """Product, union and complement rules of PVM elements."""
    basis = [StateVector.basis(3, i) for i in range(3)]
    pvm = pvm_from_basis(basis, [{0}, {1}, {2}])
    p0, p1 = pvm.element({0}), pvm.element({1})

    assert element_product(pvm, {0, 1}, {1, 2}).distance(p1) == 0
    assert element_product(pvm, {0}, {1}).distance(Operator.zero(3)) == 0
    assert element_union(pvm, {0}, {1}).distance(p0 + p1) == 0
    assert element_union(pvm, {0, 1}, {1}).distance(p0 + p1) == 0
    assert element_complement(pvm, {0}).distance(Operator.identity(3) - p0) == 0
    assert (p0 @ p1).distance(p1 @ p0) == 0


def test_pvm_validation(zx: ConjugatePair) -> None:
    """Overlapping or incomplete projector families are not PVMs."""
    up_z, up_x = (outer_product(v, v) for v in (zx.basis_f[0], zx.basis_x[0]))
    with pytest.raises(UnitarityError):
        Pvm.from_projectors([up_z, up_x])
    with pytest.raises(UnitarityError):
        Pvm.from_projectors([up_z])
    binary = Pvm.binary(up_x)
    assert binary.probabilities(zx.basis_x[0]) == pytest.approx([1.0, 0.0])


def test_povm_validation() -> None:
    """POVM elements must be PSD and sum to the identity."""
    half = Operator(np.diag([0.5, 0.5]))
    assert Povm((half, half)).completeness_defect() == 0
    with pytest.raises(UnitarityError):
        Povm((half,))
    with pytest.raises(HermiticityError):
        Povm((Operator(np.diag([1.5, 1.0])), Operator(np.diag([-0.5, 0.0]))))


def test_naimark_round_trip(rng: np.random.Generator) -> None:
    """Compressed elements give the same probabilities as the joint PVM on the evolved state."""
    for _ in range(100):
        dim_s, dim_e = int(rng.integers(2, 5)), int(rng.integers(1, 3))
        joint_dim = dim_s * dim_e
        unitary = random_unitary(rng, joint_dim)
        ready = random_state(rng, dim_e)
        psi0 = random_state(rng, dim_s)
        columns = random_unitary(rng, joint_dim).entries
        basis = [StateVector(columns[:, k]) for k in range(joint_dim)]
        pvm = pvm_from_basis(basis, [{k} for k in range(joint_dim)])

        povm = naimark_compress(pvm, unitary, ready, dim_s)
        joint = StateVector(unitary.apply(tensor_product(psi0, ready)))
        for element, projector in zip(povm.elements, pvm.projectors):
            assert abs(born_probability(psi0, element) - born_probability(joint, projector)) < 1e-10
        assert povm.completeness_defect() < 1e-9


def test_naimark_validation() -> None:
    """Dimensions must match and the joint evolution must be unitary."""
    ready = StateVector.basis(2, 0)
    pvm = pvm_from_basis([StateVector.basis(4, i) for i in range(4)], [{0, 1}, {2, 3}])
    with pytest.raises(DimensionError):
        naimark_compress(pvm, Operator.identity(4), ready, 3)
    with pytest.raises(UnitarityError):
        naimark_compress(pvm, 2 * Operator.identity(4), ready, 2)


def test_relative_state_probability() -> None:
    """The relative-state form equals the Born probability of `I ⊗ Π` on the joint state."""
    rng = np.random.default_rng(7)
    joint = BipartiteState(random_state(rng, 6).amps.reshape(2, 3))
    decomp = decompose(joint, [StateVector.basis(2, 0), StateVector.basis(2, 1)])
    record = random_state(rng, 3)
    element = outer_product(record, record)

    expected = born_probability(joint.to_vector(), Operator.identity(2).kron(element))
    assert relative_state_probability(decomp, element) == pytest.approx(expected, abs=1e-12)
    with pytest.raises(DimensionError):
        relative_state_probability(decomp, Operator.identity(2))


def test_general_projector_ignores_order_and_duplicates(rng: np.random.Generator) -> None:
    """The projector depends only on the span, not on how the family is listed."""
    vectors = [random_state(rng, 5) for _ in range(3)]
    projector = general_projector(vectors)
    shuffled = general_projector([vectors[2], vectors[0], vectors[1], vectors[0]])
    assert projector.distance(shuffled) < 1e-9
    assert check_projector(shuffled).is_projector


def test_partition_probabilities_sum_to_one(rng: np.random.Generator) -> None:
    """Cell probabilities of a PVM add up to one for any state."""
    matrix = random_unitary(rng, 6).entries
    basis = [StateVector(matrix[:, k]) for k in range(6)]
    pvm = pvm_from_basis(basis, [{0, 1}, {2}, {3, 4, 5}])
    for _ in range(20):
        assert sum(pvm.probabilities(random_state(rng, 6))) == pytest.approx(1.0, abs=1e-12)


def test_naimark_identity_dynamics() -> None:
    """Without interaction, `I_S ⊗ |R₀⟩⟨R₀|` compresses to `I_S` and a record orthogonal to `R₀` to zero."""
    ready, other = StateVector.basis(2, 0), StateVector.basis(2, 1)
    unitary = Operator.identity(4)

    on_ready = Pvm.binary(operator_tensor(Operator.identity(2), outer_product(ready, ready)))
    povm = naimark_compress(on_ready, unitary, ready, 2)
    assert povm.elements[0].distance(Operator.identity(2)) < 1e-12
    assert povm.elements[1].distance(Operator.zero(2)) < 1e-12

    on_other = Pvm.binary(operator_tensor(Operator.identity(2), outer_product(other, other)))
    assert naimark_compress(on_other, unitary, ready, 2).elements[0].distance(Operator.zero(2)) < 1e-12


def test_naimark_premeasurement(zx: ConjugatePair) -> None:
    """With orthogonal records, `I_S ⊗ |R_1⟩⟨R_1|` compresses to `|φ_1⟩⟨φ_1|`."""
    ready = StateVector.basis(2, 0)
    records = [StateVector.basis(2, 0), StateVector.basis(2, 1)]
    unitary = premeasurement_unitary(zx.basis_x, records, ready)

    record_pvm = Pvm.binary(operator_tensor(Operator.identity(2), outer_product(records[1], records[1])))
    povm = naimark_compress(record_pvm, unitary, ready, 2)
    expected = outer_product(zx.basis_x[1], zx.basis_x[1])
    assert povm.elements[0].distance(expected) < 1e-10
    assert povm.elements[1].distance(Operator.identity(2) - expected) < 1e-10
