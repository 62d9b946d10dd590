from typing import Dict
from typing import Iterator
from typing import Tuple

import numpy as np

from ..hilbert import Operator
from ..hilbert import outer_product
from ..hilbert import StateVector
from ..measures import born_probability
from ..measures import element_complement
from ..measures import element_union
from ..measures import Pvm
from ..measures import pvm_from_basis
from ..qlogic import conditional_probability
from ..qlogic import ConjugatePair
from ..qlogic import excluded_middle
from ..qlogic import implication_truth
from ..qlogic import joint_probability
from ..qlogic import TernaryValue
from ..qlogic import truth_value
from .config import ExperimentKind
from .experiment import Experiment
from .report import Cell

Entry = Tuple[str, float, TernaryValue, TernaryValue]


class TruthTable(Experiment):
    """Ternary values of plain probabilities, of the excluded middle, of material implications
    between spin-1/2 propositions `A = ↑z` and `B = ↑x` in the state `↑z`, and of both sides of
    De Morgan's law for commuting qutrit propositions."""

    kind = ExperimentKind.TRUTH_TABLE

    def _rows(self) -> Iterator[Dict[str, Cell]]:
        for proposition, probability, value, expected in (*self._plain(), *self._implications(), *self._de_morgan()):
            yield {
                "proposition": proposition,
                "probability": float(probability),
                "value": value.value,
                "expected": expected.value,
                "ok": value == expected,
            }

    @staticmethod
    def _plain() -> Iterator[Entry]:
        for p, expected in ((1.0, TernaryValue.TRUE), (0.0, TernaryValue.FALSE), (0.5, TernaryValue.UNCERTAIN)):
            yield f"P(X)={p}", p, truth_value(p), expected
        for p in (0.0, 0.3, 1.0):
            yield f"X∨¬X with P(X)={p}", 1.0, excluded_middle(p), TernaryValue.TRUE

    @staticmethod
    def _implications() -> Iterator[Entry]:
        pair = ConjugatePair.qubit_zx()
        state = pair.basis_f[0]
        a = outer_product(pair.basis_f[0], pair.basis_f[0])
        b = outer_product(pair.basis_x[0], pair.basis_x[0])
        not_a = element_complement(Pvm.binary(a), {0})
        contradiction = a @ not_a

        yield "A", born_probability(state, a), truth_value(born_probability(state, a)), TernaryValue.TRUE
        yield "B", born_probability(state, b), truth_value(born_probability(state, b)), TernaryValue.UNCERTAIN
        cases = [
            ("A⟹A", a, a, TernaryValue.TRUE),
            ("A⟹B", a, b, TernaryValue.UNCERTAIN),
            ("A⟹(¬A⟹B)", contradiction, b, TernaryValue.FALSE),
        ]
        for proposition, px, py, expected in cases:
            yield proposition, conditional_probability(state, py, px), implication_truth(state, px, py), expected

    @staticmethod
    def _de_morgan() -> Iterator[Entry]:
        basis = [StateVector.basis(3, i) for i in range(3)]
        pvm = pvm_from_basis(basis, [{0}, {1}, {2}])
        neither = Operator.identity(3) - element_union(pvm, {0}, {1})
        states = [("uniform", StateVector(np.ones(3) / np.sqrt(3))), ("e2", basis[2])]

        for name, state in states:
            p_not_or = born_probability(state, neither)
            p_and_not = joint_probability(state, element_complement(pvm, {0}), element_complement(pvm, {1}))
            yield f"¬(X∨Y) in {name}", p_not_or, truth_value(p_not_or), truth_value(p_and_not)
