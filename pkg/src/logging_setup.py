"""
Logging configuration for command-line runs.
"""

import logging

from rich.logging import RichHandler

_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


def configure_logging(verbosity: int = 0) -> None:
    """
    Install a single rich handler on the root logger.

    Args:
        verbosity: 0 for warnings, 1 for info, 2 or more for debug
    """
    level = _LEVELS[min(max(verbosity, 0), len(_LEVELS) - 1)]
    logging.basicConfig(
        level=level,
        format="%(name)s: %(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(rich_tracebacks=True, show_path=False)],
        force=True,
    )
