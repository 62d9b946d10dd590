"""
This file is where rsqlogic's numerical behavior can be customized.
"""
from dataclasses import dataclass
from dataclasses import fields
from typing import Any
from typing import Dict

from .errors import ConfigError
from .theme import LightTheme
from .theme import Theme

# Upper bound accepted for every tolerance
MAX_TOLERANCE = 1e-3

# Lower bound applied when checks read the tolerances, above double-precision rounding at dims ≤ 256
ROUNDING_FLOOR = 1e-13


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds used when validating states, operators and truth bands.

    :param norm: Maximum deviation of a state's norm from 1.
    :param herm: Maximum entry of `M - M†` for an operator to be considered Hermitian.
    :param idem: Maximum entry of `M² - M` (or `U†U - I`) for projectors and unitaries.
    :param rank: Eigenvalues or singular values below this are treated as zero.
    :param zero: Squared norms below this are treated as the zero vector.
    :param truth: Width of the bands around 0 and 1 mapped to false and true.
    """

    norm: float = 1e-10
    herm: float = 1e-10
    idem: float = 1e-10
    rank: float = 1e-10
    zero: float = 1e-12
    truth: float = 1e-9

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if not 0 <= value <= MAX_TOLERANCE:
                raise ConfigError(f"Tolerance '{f.name}' must be in [0, {MAX_TOLERANCE}], got {value}.")

    @staticmethod
    def uniform(value: float) -> "Tolerances":
        """:returns: A tolerance set with every field equal to `value`."""
        return Tolerances(*(value for _ in fields(Tolerances)))

    def floored(self, floor: float) -> "Tolerances":
        """:returns: A copy where every field is at least `floor`."""
        return Tolerances(*(max(getattr(self, f.name), floor) for f in fields(Tolerances)))

    def to_dict(self) -> Dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @staticmethod
    def from_dict(dict: Dict[str, Any]) -> "Tolerances":
        unknown = set(dict) - {f.name for f in fields(Tolerances)}
        if unknown:
            raise ConfigError(f"Unknown tolerance names: {', '.join(sorted(unknown))}")
        return Tolerances(**{k: float(v) for k, v in dict.items()})


DEFAULT_TOLERANCES = Tolerances()

# Hold the active tolerances as configured, and the floored copy read by every numerical check
_active_tolerances: Tolerances = DEFAULT_TOLERANCES
_effective_tolerances: Tolerances = DEFAULT_TOLERANCES.floored(ROUNDING_FLOOR)

# Hold the active theme used, defaults to light theme
_active_theme: Theme = LightTheme()


def set_active_tolerances(tolerances: Tolerances) -> None:
    """Setter method needed to pass elements by reference accross modules."""
    global _active_tolerances, _effective_tolerances
    _active_tolerances = tolerances
    _effective_tolerances = tolerances.floored(ROUNDING_FLOOR)


def get_active_tolerances() -> Tolerances:
    """Getter method needed to pass elements by reference accross modules."""
    return _active_tolerances


def get_effective_tolerances() -> Tolerances:
    """:returns: The active tolerances raised to `ROUNDING_FLOOR`, so that a zero tolerance still
    accepts states and operators that are exact up to rounding."""
    return _effective_tolerances


def set_active_theme(theme: Theme) -> None:
    """Setter method needed to pass elements by reference accross modules."""
    global _active_theme
    _active_theme = theme


def get_active_theme() -> Theme:
    """Getter method needed to pass elements by reference accross modules."""
    return _active_theme
