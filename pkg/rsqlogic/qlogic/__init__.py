"""
Propositional layer built on relative states.

- `conjunction` holds the ordered conjunction of conjugate propositions (the left one is
measured first) and its system-space POVM elements for any overlap of environment records.
- `disjunction` projects onto the span of possibly non-orthogonal relative states.
- `conditional` conditions joint states on propositions, without collapse.
- `distributive` measures how far the distributive law fails for a qubit.
- `truth` maps probabilities to the ternary values true, false and uncertain.
"""
# flake8: noqa
from .conditional import conditional_probability
from .conditional import conditional_state
from .conditional import implication_truth
from .conditional import joint_probability
from .conditional import project
from .conditional import regularized_conditional
from .conditional import system_given_environment
from .conditional import ZeroSignal
from .conjunction import ConjugatePair
from .conjunction import conjunction_identity_check
from .conjunction import conjunction_povm
from .conjunction import conjunction_povm_element
from .conjunction import conjunction_probability
from .conjunction import dilated_conjunction_probability
from .conjunction import Order
from .conjunction import orthogonal_records
from .disjunction import disjunction_probability
from .disjunction import disjunction_projector
from .distributive import distributive_analysis
from .distributive import DistributiveReport
from .distributive import environment_pair
from .truth import excluded_middle
from .truth import is_false
from .truth import is_true
from .truth import is_uncertain
from .truth import TernaryValue
from .truth import truth_value
