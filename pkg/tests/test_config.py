"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only
"""

import logging

import pytest

from pySegal.config import Config
from pySegal.utils import canonical_json


def test_defaults():
    cfg = Config()
    assert cfg.checks.TRUNCATION == 4
    assert cfg.tqft.APEX_LIMIT == 10**6
    assert cfg.tqft.GENUS == 2
    assert cfg.logging.handlers.STDERR == 'WARNING'


def test_load_from_dict():
    cfg = Config()
    cfg.load_from_dict({
        'checks': {'TRUNCATION': 3},
        'tqft': {'APEX_LIMIT': 5000},
        'logging': {'handlers': {'STDERR': 'INFO'}},
    })
    assert cfg.checks.TRUNCATION == 3
    assert cfg.tqft.APEX_LIMIT == 5000
    assert cfg.logging.handlers.STDERR == 'INFO'


def test_bad_entries_are_skipped(caplog):
    cfg = Config()
    with caplog.at_level(logging.ERROR):
        cfg.load_from_dict({
            'checks': {'TRUNCATION': 'many', 'NO_SUCH_KEY': 1},
            'tqft': 7,
            '_private': 1,
            'load_from_dict': None,
            'output': {'INDENT': True},
        })
    assert cfg.checks.TRUNCATION == 4
    assert not hasattr(cfg.checks, 'NO_SUCH_KEY')
    assert cfg.tqft.GENUS == 2
    assert cfg.output.INDENT == 2
    assert len(caplog.records) >= 5


def test_none_settings_take_anything():
    cfg = Config()
    cfg.load_from_dict({'logging': {'LOG_DIRECTORY': '/tmp/pysegal'}})
    assert cfg.logging.LOG_DIRECTORY == '/tmp/pysegal'
    cfg.load_from_dict({'output': {'INDENT': None}})
    assert cfg.output.INDENT is None


def test_load_from_yaml(tmp_path):
    path = tmp_path / 'pysegal.conf'
    path.write_text(
        "checks:\n"
        "  TRUNCATION: 5\n"
        "tqft:\n"
        "  GENUS: 4\n"
    )
    cfg = Config()
    cfg.load_from_yaml(str(path))
    assert cfg.checks.TRUNCATION == 5
    assert cfg.tqft.GENUS == 4


def test_empty_yaml(tmp_path):
    path = tmp_path / 'empty.conf'
    path.write_text('')
    cfg = Config()
    cfg.load_from_yaml(str(path))
    assert cfg.checks.TRUNCATION == 4


def test_missing_files():
    cfg = Config()
    # The default file is optional
    cfg.load_from_yaml()
    with pytest.raises(FileNotFoundError):
        cfg.load_from_yaml('/nonexistent/pysegal.conf')


def test_as_dict_round_trips():
    cfg = Config()
    dumped = cfg.as_dict()
    assert dumped['checks'] == {'TRUNCATION': 4, 'MIN_TRUNCATION': 2}
    other = Config()
    other.load_from_dict(dumped)
    assert canonical_json(other.as_dict()) == canonical_json(dumped)
