"""
Subspace lattice in the Birkhoff/von Neumann style, kept as the baseline against which the
relative-state logic is compared.

Propositions are closed subspaces: conjunction is the intersection (`meet`), disjunction the
sum (`join`) and negation the orthogonal complement. `check_distributivity` reproduces the
classic failure of the distributive law for spin-1/2 bases.
"""
# flake8: noqa
from .subspace import check_distributivity
from .subspace import DistributivityCheck
from .subspace import is_below
from .subspace import join
from .subspace import meet
from .subspace import orthocomplement
from .subspace import span
from .subspace import Subspace
