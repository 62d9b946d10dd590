from itertools import product
from typing import Dict
from typing import Iterator

import numpy as np

from ..hilbert import Operator
from ..hilbert import random_state
from ..hilbert import StateVector
from ..qlogic import ConjugatePair
from ..qlogic import conjunction_identity_check
from ..qlogic import conjunction_povm
from ..qlogic import conjunction_probability
from ..qlogic import dilated_conjunction_probability
from ..qlogic import Order
from .config import ExperimentKind
from .experiment import Experiment
from .report import Cell

# Agreement required between the closed form and the dilated two-stage evaluation
DILATION_TOLERANCE = 1e-10

# Maximum entry of Σ F_ji − I for orthogonal records
COMPLETENESS_TOLERANCE = 1e-9


class Conjunction(Experiment):
    """Both orders of the conjunction on the spin-1/2 pair and on a random state of the
    `dim_s`-dimensional Fourier pair, each checked against the dilated evaluation."""

    kind = ExperimentKind.CONJUNCTION

    def _rows(self) -> Iterator[Dict[str, Cell]]:
        yield from self._pair_rows("qubit-zx", ConjugatePair.qubit_zx(), StateVector.basis(2, 0))
        dim = self.config.dim_s
        yield from self._pair_rows(f"fourier-{dim}", ConjugatePair.fourier(dim), random_state(self.rng, dim))

    def _pair_rows(self, case: str, pair: ConjugatePair, psi0: StateVector) -> Iterator[Dict[str, Cell]]:
        for i, j in product(range(pair.dim), repeat=2):
            phi_first = conjunction_probability(psi0, pair, i, j, Order.F_FIRST)
            chi_first = conjunction_probability(psi0, pair, i, j, Order.X_FIRST)
            deviation = max(
                abs(phi_first - dilated_conjunction_probability(psi0, pair, i, j, Order.F_FIRST)),
                abs(chi_first - dilated_conjunction_probability(psi0, pair, i, j, Order.X_FIRST)),
            )
            identity = conjunction_identity_check(psi0, pair, i, j)
            yield {
                "case": case,
                "i": i,
                "j": j,
                "phi_first": phi_first,
                "chi_first": chi_first,
                "dilation_deviation": deviation,
                "identity": identity,
                "ok": identity and deviation < DILATION_TOLERANCE,
            }

        elements = conjunction_povm(pair, Operator.identity(pair.dim**2))
        total = sum((e.entries for e in elements.values()), np.zeros((pair.dim, pair.dim), dtype=complex))
        defect = Operator(total).distance(Operator.identity(pair.dim))
        yield {"case": f"{case} povm", "completeness_defect": defect, "ok": defect < COMPLETENESS_TOLERANCE}
