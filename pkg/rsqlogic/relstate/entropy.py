from typing import Tuple

import numpy as np

from ..hilbert import Operator
from ..measures import DensityMatrix
from .bipartite import BipartiteState


def reduced_density_system(state: BipartiteState) -> DensityMatrix:
    """Trace out the environment: `(ρ_S)_{i'i} = Σ_j a_{i'j} a*_{ij}`."""
    a = state.amps
    return DensityMatrix(Operator(a @ a.conj().T))


def reduced_density_environment(state: BipartiteState) -> DensityMatrix:
    """Trace out the system: `(ρ_E)_{jj'} = Σ_i a_{ij} a*_{ij'}`."""
    a = state.amps
    return DensityMatrix(Operator(a.T @ a.conj()))


def entanglement_entropy(rho: DensityMatrix) -> float:
    """Von Neumann entropy `−Σ λ log₂ λ` in bits, with `0 · log 0 = 0`."""
    eigenvalues = np.array(rho.eigenvalues())
    positive = eigenvalues[eigenvalues > 0]
    entropy = float(-np.sum(positive * np.log2(positive)))
    return float(np.clip(entropy, 0, np.log2(rho.dim)))


def entropy_symmetry_check(state: BipartiteState) -> Tuple[float, float]:
    """:returns: `(S(ρ_S), S(ρ_E))`, which coincide for any pure bipartite state."""
    return (
        entanglement_entropy(reduced_density_system(state)),
        entanglement_entropy(reduced_density_environment(state)),
    )
