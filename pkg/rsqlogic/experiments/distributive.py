from typing import Dict
from typing import Iterator

import numpy as np

from ..hilbert import StateVector
from ..qlogic import ConjugatePair
from ..qlogic import distributive_analysis
from .config import ExperimentKind
from .experiment import Experiment
from .report import Cell

# Bound on both the report identity lhs = rhs_sum + interference and the linearity in s
SWEEP_TOLERANCE = 1e-10


class DistributiveSweep(Experiment):
    """`P([↑z ∨ ↓z] ∧ ↑x)` for `ψ₀ = cos(π/8) ↑z + sin(π/8) ↓z` over a uniform grid of
    record overlaps `s ∈ [0, 1]`."""

    kind = ExperimentKind.DISTRIBUTIVE_SWEEP

    def _rows(self) -> Iterator[Dict[str, Cell]]:
        psi0 = StateVector(np.array([np.cos(np.pi / 8), np.sin(np.pi / 8)]))
        pair = ConjugatePair.qubit_zx()
        full = distributive_analysis(psi0, pair, 0, 1.0)

        for s in np.linspace(0, 1, self.config.sweep_points):
            report = distributive_analysis(psi0, pair, 0, float(s))
            linearity = abs(report.interference - s * full.interference)
            yield {
                **report.to_dict(),
                "residual": report.residual,
                "linearity": float(linearity),
                "ok": bool(abs(report.residual) < SWEEP_TOLERANCE and linearity < SWEEP_TOLERANCE),
            }
