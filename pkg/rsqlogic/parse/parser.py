from ..config import get_active_theme as TH
from ..console import console
from ..errors import ConfigError
from ..experiments import ExperimentConfig


class Parser:
    """Abstract class that defines a unified interface to all parser subclasses."""

    def __init__(self, filename: str):
        """Abstract class that defines a unified interface to all parser subclasses to remain file type independent.
        :param filename: Relative path to your input file."""
        try:
            with open(filename) as f:
                self.data = f.read()
        except OSError as e:
            raise ConfigError(f"Cannot read configuration file '{filename}': {e.strerror}") from e

    def parse(self) -> ExperimentConfig:
        """Convert the input file to a validated `ExperimentConfig` instance."""
        with console.status(f"[bold {TH().ACCENT}]Parsing input file...", spinner_style=TH().ACCENT):
            return self._parse_data()

    def _parse_data(self) -> ExperimentConfig:
        """Method to be overridden by each parser to return an `ExperimentConfig` instance."""
        raise NotImplementedError("Method must be overriden by subclass.")
