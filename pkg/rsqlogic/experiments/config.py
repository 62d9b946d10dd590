from dataclasses import dataclass
from dataclasses import field
from enum import Enum
from typing import Any
from typing import Dict

from ..config import DEFAULT_TOLERANCES
from ..config import Tolerances
from ..errors import ConfigError


class ExperimentKind(Enum):
    """Scenarios the runner knows how to reproduce."""

    BVN_DEMO = "bvn-demo"
    CONJUNCTION = "conjunction"
    DISTRIBUTIVE_SWEEP = "distributive-sweep"
    ENTROPY_TRACE = "entropy-trace"
    NAIMARK_CHECK = "naimark-check"
    TRUTH_TABLE = "truth-table"


class ReportFormat(Enum):
    JSON = "json"
    CSV = "csv"


def _enum_value(enum: Any, value: str, what: str) -> Any:
    try:
        return enum(value)
    except ValueError:
        options = ", ".join(e.value for e in enum)
        raise ConfigError(f"Unknown {what} '{value}', options are: {options}") from None


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything a run depends on. Two runs with equal configurations produce identical reports.

    :param experiment: Which scenario to run.
    :param dim_s: System dimension used by the scalable experiments.
    :param dim_e: Environment dimension used by the scalable experiments.
    :param sweep_points: Grid size of sweeps, or number of random instances.
    :param tolerances: Numerical tolerances activated for the duration of the run.
    :param seed: Seed of the random generator.
    :param output_format: Serialization of the report.
    """

    experiment: ExperimentKind
    dim_s: int = 2
    dim_e: int = 2
    sweep_points: int = 11
    tolerances: Tolerances = field(default=DEFAULT_TOLERANCES)
    seed: int = 0
    output_format: ReportFormat = ReportFormat.JSON

    def __post_init__(self) -> None:
        if self.dim_s < 2 or self.dim_e < 2:
            raise ConfigError(f"Dimensions must be at least 2, got dim_s={self.dim_s}, dim_e={self.dim_e}.")
        if self.sweep_points < 2:
            raise ConfigError(f"At least 2 sweep points are needed, got {self.sweep_points}.")
        if self.seed < 0:
            raise ConfigError(f"Seed must be non-negative, got {self.seed}.")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "experiment": self.experiment.value,
            "dim_s": self.dim_s,
            "dim_e": self.dim_e,
            "sweep_points": self.sweep_points,
            "tolerances": self.tolerances.to_dict(),
            "seed": self.seed,
            "format": self.output_format.value,
        }

    @staticmethod
    def from_dict(dict: Dict[str, Any]) -> "ExperimentConfig":
        if "experiment" not in dict:
            raise ConfigError("Configuration must name an experiment.")
        try:
            return ExperimentConfig(
                experiment=_enum_value(ExperimentKind, dict["experiment"], "experiment"),
                dim_s=int(dict.get("dim_s", 2)),
                dim_e=int(dict.get("dim_e", 2)),
                sweep_points=int(dict.get("sweep_points", 11)),
                tolerances=Tolerances.from_dict(dict.get("tolerances", {})),
                seed=int(dict.get("seed", 0)),
                output_format=_enum_value(ReportFormat, dict.get("format", "json"), "format"),
            )
        except (TypeError, ValueError) as e:
            if isinstance(e, ConfigError):
                raise
            raise ConfigError(f"Invalid configuration value: {e}") from e
