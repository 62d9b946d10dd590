import json

from ..errors import ConfigError
from ..experiments import ExperimentConfig
from .parser import Parser


class ImportJSON(Parser):
    """JSON configuration deserializer to an `ExperimentConfig` instance."""

    def _parse_data(self) -> ExperimentConfig:
        """:returns: The experiment configuration described by the file."""
        try:
            json_dict = json.loads(self.data)
        except json.JSONDecodeError as e:
            raise ConfigError(f"Configuration file is not valid JSON: {e.msg} (line {e.lineno}).") from e
        if not isinstance(json_dict, dict):
            raise ConfigError("Configuration file must contain a single JSON object.")
        return ExperimentConfig.from_dict(json_dict)
