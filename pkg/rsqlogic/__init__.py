"""
rsqlogic is a finite-dimensional toolkit for relative-state quantum logic: it expands
system⊗environment states into relative states, builds PVMs, POVMs and their Naimark
dilations, and evaluates conjunctions, disjunctions, conditional states and ternary truth
values of propositions, with an experiment runner reproducing the classic scenarios.
"""
# flake8: noqa
# noreorder
from .__meta__ import __author__  # noqa: F401
from .__meta__ import __copyright__  # noqa: F401
from .__meta__ import __version__  # noqa: F401

# Linear algebra
from .hilbert import StateVector, Operator, inner_product, outer_product, tensor_product, unitary_completion

# Lattice
from .lattice import Subspace, span, meet, join, orthocomplement, check_distributivity

# Measures
from .measures import DensityMatrix, Pvm, Povm, born_probability, general_projector, naimark_compress

# Relative states
from .relstate import BipartiteState, RelativeStateDecomposition, decompose, entanglement_entropy

# Logic
from .qlogic import ConjugatePair, Order, TernaryValue, conjunction_probability, distributive_analysis, truth_value

# Experiments
from .experiments import ExperimentConfig, ExperimentKind, Report, run, write_report

# Main
from .runner import Runner

# Configuration and themes
from .config import Tolerances, set_active_tolerances, get_active_tolerances, get_effective_tolerances
from .theme import Theme, LightTheme, DarkTheme

# Enable rich's features
from rich import pretty, traceback

traceback.install()
pretty.install()
