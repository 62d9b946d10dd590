"""
Reproducible scenarios run from the command line, each producing a `Report` whose rows carry
their own tolerance check. A report passes when every row does.

- `config` defines `ExperimentConfig` and the available experiment and output kinds.
- `report` holds `Report`, its JSON/CSV serialization and its console table.
- `registry` maps experiment identifiers to `Experiment` subclasses and runs them.
"""
# flake8: noqa
from .config import ExperimentConfig
from .config import ExperimentKind
from .config import ReportFormat
from .experiment import Experiment
from .registry import AVAILABLE_EXPERIMENTS
from .registry import run
from .report import render_report
from .report import Report
from .report import write_report
