"""
Exceptions raised by rsqlogic. They all derive from `ValueError` so that callers can catch
any invalid input with a single clause, which is what the command-line runner does.
"""


class DimensionError(ValueError):
    """Two objects that must live on the same space (or compatible spaces) do not."""


class NormalizationError(ValueError):
    """A state is not normalized, or a zero vector was given where a state is required."""


class HermiticityError(ValueError):
    """An operator is not Hermitian, or not positive semi-definite where required."""


class UnitarityError(ValueError):
    """An operator is not unitary, or a family of vectors is not orthonormal."""


class LabelError(ValueError):
    """Unknown PVM label, invalid partition of the index set, or index out of range."""


class ProbabilityError(ValueError):
    """A probability is outside [0, 1] or carries an imaginary residue."""


class ConfigError(ValueError):
    """Invalid experiment configuration or unknown experiment name."""


class NonCommutingError(ValueError):
    """A symmetric joint probability was requested for non-commuting elements."""
