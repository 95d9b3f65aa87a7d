"""
rainbowtri Launcher
Validates the environment, then hands the command line to rainbowtri.cli,
which owns configuration and logging.
"""

import logging
import os
import sys
from pathlib import Path

from rainbowtri.cli import run
from rainbowtri.protocol import ENV_SETTINGS_PATH, ExitCode
from rainbowtri.settings import DEFAULT_SETTINGS_PATH

_logger = logging.getLogger(__name__)


def validate_environment() -> bool:
    """
    Check the Python version and look for the settings file.

    Returns:
        True if rainbowtri can run, False otherwise
    """
    if sys.version_info < (3, 10):
        _logger.error(f"Python 3.10+ required, found {sys.version_info.major}.{sys.version_info.minor}")
        return False
    settings_file = Path(os.getenv(ENV_SETTINGS_PATH) or DEFAULT_SETTINGS_PATH)
    if not settings_file.exists():
        # settings.py falls back to built-in defaults
        _logger.warning(f"{settings_file} not found; built-in defaults apply")
    return True


def main() -> int:
    if not validate_environment():
        return ExitCode.USAGE_ERROR
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
