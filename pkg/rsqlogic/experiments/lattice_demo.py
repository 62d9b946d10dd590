from typing import Dict
from typing import Iterator

from ..lattice import check_distributivity
from ..lattice import span
from ..qlogic import ConjugatePair
from .config import ExperimentKind
from .experiment import Experiment
from .report import Cell


class BvnDemo(Experiment):
    """Distributive law of the subspace lattice for spin-1/2, failing for conjugate bases and
    holding when every subspace comes from one basis."""

    kind = ExperimentKind.BVN_DEMO

    def _rows(self) -> Iterator[Dict[str, Cell]]:
        pair = ConjugatePair.qubit_zx()
        up_z, down_z = pair.basis_f
        up_x, down_x = pair.basis_x
        cases = [
            ("↑z ∧ (↑x ∨ ↓x)", (up_z, up_x, down_x), False),
            ("↑z ∧ (↑z ∨ ↓z)", (up_z, up_z, down_z), True),
        ]

        for case, vectors, expected in cases:
            a, b, c = (span([v], 2) for v in vectors)
            check = check_distributivity(a, b, c)
            yield {
                "case": case,
                **check.to_dict(),
                "distance": check.lhs.projector.distance(check.rhs.projector),
                "ok": check.equal == expected and check.lhs.equals(a),
            }
