"""
Relative states of a system entangled with its environment.

- `BipartiteState` holds the amplitudes `a_ij` of a system⊗environment state.
- `decompose` expands it as `Σ_i a_i |φ_i⟩|R_i⟩`; `PartialRelativeFamily` and
`two_stage_state` do the same for two successive measurements, the environment keeping one
record `R_ji` per history.
- `entropy` gives the reduced density matrices and their von Neumann entropy.
- `dynamics` builds premeasurement unitaries and evolves product states with them.
"""
# flake8: noqa
from .bipartite import BipartiteState
from .decomposition import decompose
from .decomposition import PartialRelativeFamily
from .decomposition import RelativeStateDecomposition
from .decomposition import two_stage_state
from .dynamics import evolve
from .dynamics import premeasurement_unitary
from .entropy import entanglement_entropy
from .entropy import entropy_symmetry_check
from .entropy import reduced_density_environment
from .entropy import reduced_density_system
