"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Logging for a single-process, batch-style program

  * An initial stderr handler is available before config is read,
    so that config success/errors get logged somewhere

  * After config is read, stderr verbosity and an optional log file
    are set from the 'logging' section of config

  * All pySegal loggers are children of 'pySegal', so their effective
    level can be raised to DEBUG without dragging third-party packages
    along. Third-party loggers are reached as 'root.<name>'.

Library code only logs. Nothing here prints.
"""

import copy
import logging
import logging.handlers
import os
from typing import Union

import pySegal
from pySegal.config_load import ConfigLoadable


initial_handler = None
stderr_handler = None
logfile_handler = None


class Formatter (logging.Formatter):
    """
    Change the logger name on output to remove _ROOT_LOGGER_PREFIX = 'pySegal'
    and add 'root.' to others
    """

    @classmethod
    def revised_record(cls, record: logging.LogRecord) -> logging.LogRecord:
        revised = copy.copy(record)
        name = revised.name
        if name.startswith(pySegal._ROOT_LOGGER_PREFIX):
            revised.name = name[pySegal._ROOT_LOGGER_PREFIX_LEN:]
        elif name == 'root':
            pass
        else:
            revised.name = 'root.' + name
        return revised

    def format(self, record: logging.LogRecord) -> str:
        return super(Formatter, self).format(
            self.revised_record(record))


# Common definition of the 'logging' section of config

class ConfigLogging (ConfigLoadable):
    def __init__(self):
        # File logging is off unless both are set
        self.LOG_DIRECTORY = None
        # NB: The log file name is matched against [a-zA-Z0-9._-]
        self.LOG_FILENAME = None
        self.formatters = ConfigLoggingFormatters()
        self.handlers = ConfigLoggingHandlers()
        self.LOGGERS = {
            'root.hypothesis': 'INFO',
        }


class ConfigLoggingFormatters (ConfigLoadable):
    def __init__(self):
        self.LOGFILE = '%(asctime)s %(levelname)s %(name)s: %(message)s'
        self.STDERR = '%(levelname)s %(name)s: %(message)s'


class ConfigLoggingHandlers (ConfigLoadable):
    def __init__(self):
        self.LOGFILE = 'INFO'
        self.STDERR = 'WARNING'


def setup_initial_logger():
    """
    Configure a basic logger that logs to stderr at WARNING level,
    sufficient to report errors in reading config
    """
    global initial_handler

    root_logger = logging.getLogger()
    if initial_handler is not None \
            and initial_handler in root_logger.handlers:
        return

    formatter = Formatter("%(levelname)s %(name)s: %(message)s")

    initial_handler = logging.StreamHandler()
    initial_handler.setFormatter(formatter)
    initial_handler.setLevel(logging.WARNING)
    initial_handler.name = 'initial_logger'

    root_logger.addHandler(initial_handler)
    pySegal.getLogger().setLevel(logging.DEBUG)


def setup_direct_logging(config_logging: ConfigLogging):
    """
    Replace the initial handler with the configured ones

    NB: Call *after* config has been read
    """
    global initial_handler, stderr_handler, logfile_handler

    root_logger = logging.getLogger()

    for handler in (initial_handler, stderr_handler, logfile_handler):
        if handler is not None and handler in root_logger.handlers:
            root_logger.removeHandler(handler)
    initial_handler = None

    stderr_handler = logging.StreamHandler()
    stderr_handler.setFormatter(
        Formatter(fmt=config_logging.formatters.STDERR))
    stderr_handler.setLevel(config_logging.handlers.STDERR)
    stderr_handler.name = 'stderr_handler'
    root_logger.addHandler(stderr_handler)

    if config_logging.LOG_DIRECTORY is None \
            or config_logging.LOG_FILENAME is None:
        logfile_handler = None
        pySegal.getLogger('Logging').debug(
            "File logging disabled as either "
            "LOG_DIRECTORY or LOG_FILENAME is None")
    else:
        if not os.path.exists(config_logging.LOG_DIRECTORY):
            pySegal.getLogger('Logging').warning(
                "LOG_DIRECTORY '{}' does not exist. Creating.".format(
                    os.path.realpath(config_logging.LOG_DIRECTORY)))
            os.makedirs(config_logging.LOG_DIRECTORY)
        fq_logfile = os.path.join(config_logging.LOG_DIRECTORY,
                                  config_logging.LOG_FILENAME)
        logfile_handler = logging.handlers.WatchedFileHandler(fq_logfile)
        logfile_handler.setFormatter(
            Formatter(fmt=config_logging.formatters.LOGFILE))
        logfile_handler.setLevel(config_logging.handlers.LOGFILE)
        logfile_handler.name = 'logfile_handler'
        root_logger.addHandler(logfile_handler)

    config_logger_levels(config_logging)


def get_int_from_level(logging_level: Union[int, str]) -> int:
    if isinstance(logging_level, str):
        # Despite the name, this will return a number from a string
        return logging.getLevelName(logging_level)
    else:
        return logging_level


def set_root_logger_levels(config_logging: ConfigLogging):
    levels = [get_int_from_level(config_logging.handlers.STDERR)]
    if logfile_handler is not None:
        levels.append(logfile_handler.level)
    level = min(levels)
    pySegal.getLogger().setLevel(level)


def config_logger_levels(config_logging: ConfigLogging):
    set_root_logger_levels(config_logging)
    logger = pySegal.getLogger('Logging.Config')
    for logger_name, logger_level in config_logging.LOGGERS.items():
        logger.debug(f"Setting {logger_name} to {logger_level}")
        pySegal.getLogger(logger_name).setLevel(logger_level)
