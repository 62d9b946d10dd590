from typing import Dict
from typing import Iterator

from ..hilbert import random_state
from ..hilbert import random_unitary
from ..hilbert import StateVector
from ..measures import born_probability
from ..measures import naimark_compress
from ..measures import pvm_from_basis
from ..relstate import evolve
from .config import ExperimentKind
from .experiment import Experiment
from .report import Cell

# Agreement between ⟨ψ₀|F_X|ψ₀⟩ and ⟨Ψ|Π_X|Ψ⟩
ROUND_TRIP_TOLERANCE = 1e-10

# Maximum entry of Σ F_X − I
COMPLETENESS_TOLERANCE = 1e-9


class NaimarkCheck(Experiment):
    """Random joint dynamics, ready states and two-cell PVMs: probabilities of the compressed
    POVM on the system must match those of the PVM on the evolved joint state."""

    kind = ExperimentKind.NAIMARK_CHECK

    def _rows(self) -> Iterator[Dict[str, Cell]]:
        dim_s, dim_e = self.config.dim_s, self.config.dim_e
        joint_dim = dim_s * dim_e

        for instance in range(self.config.sweep_points):
            unitary = random_unitary(self.rng, joint_dim)
            ready = random_state(self.rng, dim_e)
            psi0 = random_state(self.rng, dim_s)
            columns = random_unitary(self.rng, joint_dim).entries
            basis = [StateVector(columns[:, k]) for k in range(joint_dim)]
            cut = int(self.rng.integers(1, joint_dim))

            pvm = pvm_from_basis(basis, [set(range(cut)), set(range(cut, joint_dim))])
            povm = naimark_compress(pvm, unitary, ready, dim_s)
            joint = evolve(psi0, ready, unitary).to_vector()
            deviation = max(
                abs(born_probability(psi0, element) - born_probability(joint, projector))
                for element, projector in zip(povm.elements, pvm.projectors)
            )
            defect = povm.completeness_defect()
            yield {
                "instance": instance,
                "cut": cut,
                "max_deviation": deviation,
                "completeness_defect": defect,
                "ok": deviation < ROUND_TRIP_TOLERANCE and defect < COMPLETENESS_TOLERANCE,
            }
