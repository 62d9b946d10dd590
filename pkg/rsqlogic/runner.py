import sys
from typing import Any
from typing import Dict
from typing import List
from typing import Optional

from docopt import docopt

from .__meta__ import __version__
from .config import get_active_theme as TH
from .config import set_active_theme
from .config import Tolerances
from .console import console
from .errors import ConfigError
from .experiments import ExperimentConfig
from .experiments import render_report
from .experiments import Report
from .experiments import run
from .experiments import write_report
from .parse.json import ImportJSON
from .theme import AVAILABLE_THEMES
from .theme import Theme
from .usage import __doc__

# Exit codes of `Runner.run`
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INVALID = 2


class Runner:
    """Main entry class that runs one experiment and writes its report.

    The configuration can be passed directly or built from the command-line options
    (type `qlogic --help`).

    :param config: The experiment to run, replaced by the command line unless `ignore_argv` is set.
    :param out: Path of the report file, the report goes to the standard output if not set.
    :param quiet: Don't render the report table to the console, defaults to False.
    :param theme: Color theme of the console output.
    :param ignore_argv: Don't read the command line, defaults to False.
    :param argv: Command-line arguments to use instead of `sys.argv[1:]`.
    """

    def __init__(
        self,
        config: Optional[ExperimentConfig] = None,
        out: Optional[str] = None,
        quiet: bool = False,
        theme: Optional[Theme] = None,
        ignore_argv: bool = False,
        argv: Optional[List[str]] = None,
    ):
        self.config = config
        self.out = out
        self.quiet = quiet

        # Set the global color theme if specified
        if theme:
            set_active_theme(theme)

        # Unless disabled, the command line options become an additional source of settings
        self._args: Dict[str, Any] = {}
        if not ignore_argv:
            self._args = docopt(__doc__, argv=argv, version=__version__)

    def _parse_args(self) -> None:
        """Internal method that converts the command-line options to a configuration.

        :raises ConfigError: If an option is invalid or the experiment is unknown.
        """
        args = self._args
        if not args:
            return
        if args["--out"]:
            self.out = args["--out"]
        if args["--quiet"]:
            self.quiet = True
        if args["--theme"]:
            theme_name = str(args["--theme"])
            if theme_name not in AVAILABLE_THEMES:
                raise ConfigError("Theme name options: " + ", ".join(AVAILABLE_THEMES.keys()))
            set_active_theme(AVAILABLE_THEMES[theme_name]())

        if args["--json"]:
            self.config = ImportJSON(args["--json"]).parse()
            return

        config: Dict[str, Any] = {
            "experiment": args["<experiment>"],
            "dim_s": args["--dim-s"],
            "dim_e": args["--dim-e"],
            "sweep_points": args["--points"],
            "seed": args["--seed"],
            "format": args["--format"],
        }
        if args["--tol"]:
            try:
                config["tolerances"] = Tolerances.uniform(float(args["--tol"])).to_dict()
            except ValueError as e:
                raise ConfigError(f"Invalid tolerance '{args['--tol']}': {e}") from e
        self.config = ExperimentConfig.from_dict(config)

    def run(self) -> int:
        """Main method: resolve the configuration, run the experiment, render and export the report.

        :returns: `EXIT_PASS` if every row of the report is within tolerance, `EXIT_FAIL` if not,
        `EXIT_INVALID` if the configuration is invalid or the report cannot be written.
        """
        try:
            self._parse_args()
            if self.config is None:
                raise ConfigError("No experiment configured, type 'qlogic --help'.")
            with console.status(
                f"[bold {TH().ACCENT}]Running {self.config.experiment.value}...", spinner_style=TH().ACCENT
            ):
                report = run(self.config)
            self.export(report)
        except ValueError as e:
            console.log(f"[red][bold]Error:[/] {e}")
            return EXIT_INVALID
        except OSError as e:
            console.log(f"[red][bold]Error:[/] Cannot write the report: {e}")
            return EXIT_INVALID

        if not self.quiet:
            console.print(render_report(report))
        if not report.passed:
            failed = sum(not row["ok"] for row in report.rows)
            console.log(f"[yellow][bold]Warning:[/] {failed} row(s) outside tolerance.")
        return EXIT_PASS if report.passed else EXIT_FAIL

    def export(self, report: Report) -> None:
        """Write the serialized report to `self.out`, or to the standard output."""
        assert self.config is not None
        data = write_report(report, self.config.output_format)
        if self.out:
            with open(self.out, "wb") as f:
                f.write(data)
            console.log(f"Saved report to '{self.out}'")
        else:
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
