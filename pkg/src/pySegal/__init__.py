"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

pySegal -- finite 2-Segal cosymmetric sets, spans, Hall algebras
and span-valued 2D TQFT evaluation

Provides pySegal.getLogger()

"""
import logging
from typing import Optional

__version__ = '1.0.0'

_ROOT_LOGGER_NAME = 'pySegal'
_ROOT_LOGGER_PREFIX = _ROOT_LOGGER_NAME + '.'
_ROOT_LOGGER_PREFIX_LEN = len(_ROOT_LOGGER_PREFIX)


def getLogger(name: Optional[str]=None) -> logging.Logger:
    pysegal_root = logging.getLogger(_ROOT_LOGGER_NAME)
    retval = None
    if name is None:
        retval = pysegal_root
    elif name == 'root':
        retval = logging.getLogger()
    elif name.startswith('root.'):
        retval = logging.getLogger(name[5:])
    else:
        retval = pysegal_root.getChild(name)
    return retval
