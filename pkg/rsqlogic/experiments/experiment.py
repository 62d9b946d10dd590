from typing import Dict
from typing import Iterator

import numpy as np

from .config import ExperimentConfig
from .config import ExperimentKind
from .report import Cell
from .report import Report


class Experiment:
    """Base class of the scenarios reproduced by the runner.

    Subclasses set `kind` and generate result rows in `_rows`, drawing any randomness from
    `self.rng` so that a configuration and its seed fully determine the report.

    :param config: The run configuration, echoed in the report inputs.
    """

    kind: ExperimentKind

    def __init__(self, config: ExperimentConfig):
        self.config = config
        self.rng = np.random.default_rng(config.seed)

    def run(self) -> Report:
        """Generate every row and collect them in a report."""
        report = Report(self.kind.value, self.config.to_dict())
        for row in self._rows():
            report.add_row(row)
        return report

    def _rows(self) -> Iterator[Dict[str, Cell]]:
        """Abstract method, must be overridden by subclasses to yield the report rows."""
        raise NotImplementedError("Method must be overridden by a subclass.")
