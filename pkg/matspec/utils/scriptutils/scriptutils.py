"""
Helpers shared by the scripts in matspec.bin
"""

import logging
from matspec import Defaults

logger = logging.getLogger(__name__)


def add_logging_file_handler(log_file_name, overwrite, logger_objects=None, log_dir=None, mode="w"):
    """
    Mirror the package logs to <log_dir>/<log_file_name> (log_dir defaults to
    Defaults.LOG_DIR). Does nothing but a debug note when log_file_name is empty.

    Returns:
        The log file path or None
    """
    if not log_file_name:
        logger.debug("No --log_file given, logging to screen only")
        return None
    return Defaults.set_logging_file_handler(file_name=log_file_name,
                                             loggers=logger_objects,
                                             overwrite_existing=overwrite,
                                             log_dir=log_dir,
                                             mode=mode)
