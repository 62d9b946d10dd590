from typing import Dict
from typing import Type

from ..config import get_active_tolerances
from ..config import set_active_tolerances
from .config import ExperimentConfig
from .conjunction import Conjunction
from .distributive import DistributiveSweep
from .entropy import EntropyTrace
from .experiment import Experiment
from .lattice_demo import BvnDemo
from .naimark import NaimarkCheck
from .report import Report
from .truth_table import TruthTable

# List available experiments, used by `run` to search for class definitions
AVAILABLE_EXPERIMENTS: Dict[str, Type[Experiment]] = {
    e.kind.value: e for e in (BvnDemo, Conjunction, DistributiveSweep, EntropyTrace, NaimarkCheck, TruthTable)
}


def run(config: ExperimentConfig) -> Report:
    """Run one experiment with the configuration's tolerances active, restoring the previous
    tolerances afterwards."""
    previous = get_active_tolerances()
    set_active_tolerances(config.tolerances)
    try:
        return AVAILABLE_EXPERIMENTS[config.experiment.value](config).run()
    finally:
        set_active_tolerances(previous)
