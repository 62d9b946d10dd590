from enum import Enum
from typing import Optional

import numpy as np

from ..config import get_effective_tolerances as TOL
from ..errors import ProbabilityError


class TernaryValue(Enum):
    """Truth value assigned to a proposition from its probability."""

    TRUE = "T"
    FALSE = "F"
    UNCERTAIN = "U"


def _check_probability(p: float) -> float:
    if not np.isfinite(p) or not 0 <= p <= 1:
        raise ProbabilityError(f"Probability must be in [0, 1], got {p}.")
    return float(p)


def _band(tolerance: Optional[float]) -> float:
    return TOL().truth if tolerance is None else tolerance


def is_true(p: float, tolerance: Optional[float] = None) -> bool:
    """`T(X)`: the proposition is certain, `P(X) = 1` within the truth band."""
    return _check_probability(p) >= 1 - _band(tolerance)


def is_false(p: float, tolerance: Optional[float] = None) -> bool:
    """`F(X)`: the proposition is certainly not the case, `P(X) = 0` within the truth band."""
    return _check_probability(p) <= _band(tolerance)


def is_uncertain(p: float, tolerance: Optional[float] = None) -> bool:
    """`U(X)`: anything strictly between the two bands."""
    return not is_true(p, tolerance) and not is_false(p, tolerance)


def truth_value(p: float, tolerance: Optional[float] = None) -> TernaryValue:
    """Map a probability to exactly one of true, false or uncertain."""
    if is_true(p, tolerance):
        return TernaryValue.TRUE
    if is_false(p, tolerance):
        return TernaryValue.FALSE
    return TernaryValue.UNCERTAIN


def excluded_middle(p_x: float, tolerance: Optional[float] = None) -> TernaryValue:
    """Evaluate `T(X ∨ ¬X)`.

    `¬X` is the orthocomplementary element, so `P(¬X) = 1 − P(X)` and the two are disjoint:
    the disjunction's probability is their sum. The result is true even when `X` is uncertain.
    """
    p_not = 1 - _check_probability(p_x)
    return truth_value(float(np.clip(p_x + p_not, 0, 1)), tolerance)
