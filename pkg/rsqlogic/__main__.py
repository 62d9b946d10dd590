"""
This file describes rsqlogic's behavior when called as {code}`qlogic [options]` or
{code}`python -m rsqlogic [options]`: run one experiment and exit with the runner's code.
"""
import sys

from .runner import Runner


def main() -> None:
    """Console script entry point."""
    sys.exit(Runner().run())


if __name__ == "__main__":
    main()
