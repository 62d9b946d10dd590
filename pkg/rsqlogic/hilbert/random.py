"""
Seeded random states and unitaries used by the experiments and the test-suite.
"""
import numpy as np

from .operators import Operator
from .vectors import normalize
from .vectors import StateVector


def random_state(rng: np.random.Generator, dim: int) -> StateVector:
    """:returns: A state drawn uniformly from the unit sphere of `C^dim`."""
    return normalize(rng.standard_normal(dim) + 1j * rng.standard_normal(dim))


def random_unitary(rng: np.random.Generator, dim: int) -> Operator:
    """:returns: A Haar-distributed unitary (QR of a complex Ginibre matrix with phase fix)."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return Operator(q * (d / np.abs(d)))
