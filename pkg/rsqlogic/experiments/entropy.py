from typing import Dict
from typing import Iterator

import numpy as np

from ..hilbert import StateVector
from ..relstate import entropy_symmetry_check
from ..relstate import evolve
from ..relstate import premeasurement_unitary
from .config import ExperimentKind
from .experiment import Experiment
from .report import Cell

# Allowed gap between S(ρ_S) and S(ρ_E), and overshoot of the log₂ min(dim_s, dim_e) bound
ENTROPY_TOLERANCE = 1e-9


class EntropyTrace(Experiment):
    """Entanglement entropy of a uniform superposition premeasured by an environment whose
    records `R_i = cos θ R₀ + sin θ E_i` separate as `θ` goes from 0 to π/2.

    With fewer environment than system dimensions, the directions `E_1 … E_{dim_e − 1}` are
    reused cyclically, so several outcomes share a record and the entropy saturates at
    `log₂ dim_e` instead of `log₂ dim_s`.
    """

    kind = ExperimentKind.ENTROPY_TRACE

    def _rows(self) -> Iterator[Dict[str, Cell]]:
        dim_s, dim_e = self.config.dim_s, self.config.dim_e
        basis = [StateVector.basis(dim_s, i) for i in range(dim_s)]
        ready = StateVector.basis(dim_e, 0)
        directions = [StateVector.basis(dim_e, 1 + (i - 1) % (dim_e - 1)) for i in range(1, dim_s)]
        initial = StateVector(np.ones(dim_s) / np.sqrt(dim_s))
        bound = np.log2(min(dim_s, dim_e))

        for theta in np.linspace(0, np.pi / 2, self.config.sweep_points):
            targets = [ready] + [StateVector(np.cos(theta) * ready.amps + np.sin(theta) * e.amps) for e in directions]
            joint = evolve(initial, ready, premeasurement_unitary(basis, targets, ready))
            s_system, s_environment = entropy_symmetry_check(joint)
            yield {
                "theta": float(theta),
                "overlap": float(np.cos(theta)),
                "s_system": s_system,
                "s_environment": s_environment,
                "ok": bool(abs(s_system - s_environment) < ENTROPY_TOLERANCE and s_system <= bound + ENTROPY_TOLERANCE),
            }
