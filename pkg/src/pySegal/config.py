"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Module that defines an instance, refer to the instance

        from pySegal.config import config
        do_something_with(config.section.VALUE)

Command-line flags override values read from the config file.
A second instance, disconnected from the shared one, can be made with
Config() for tests or library callers that need their own limits.
"""

import pySegal
from pySegal.config_load import ConfigYAML, ConfigLoadable
from pySegal.pysegal_logging import ConfigLogging

DEFAULT_CONFIG_FILE = '/usr/local/etc/pysegal/pysegal.conf'

logger = pySegal.getLogger('Config')


class Config (ConfigYAML):

    DEFAULT_CONFIG_FILE = DEFAULT_CONFIG_FILE

    def __init__(self):
        super(Config, self).__init__()
        self.checks = _Checks()
        self.tqft = _TQFT()
        self.output = _Output()
        self.logging = ConfigLogging()


# This craziness is so pyCharm autocompletes
# Otherwise typing.SimpleNamespace() would be sufficient


class _Checks (ConfigLoadable):
    def __init__(self):
        # Relations are verified for composite levels up to this
        self.TRUNCATION = 4
        self.MIN_TRUNCATION = 2


class _TQFT (ConfigLoadable):
    def __init__(self):
        # Largest intermediate apex before evaluation gives up
        self.APEX_LIMIT = 10**6
        # Closed-surface invariant table is exported for g = 0..GENUS
        self.GENUS = 2


class _Output (ConfigLoadable):
    def __init__(self):
        self.INDENT = 2


config = Config()
