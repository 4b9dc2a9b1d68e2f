"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only
"""

import enum
import json
from fractions import Fraction
from typing import Optional

import numpy as np

# Integers beyond this are written as strings so that readers using
# IEEE doubles don't silently round them
JSON_SAFE_INT = 2**53


def prep_for_json(val):
    """
    Special cases for conversion to JSON:
    * enum classes
    * Fraction (always as a string, "p" or "p/q")
    * big integers (as strings)
    * numpy scalars and arrays
    * tuples (as lists)
    * dataclass-like objects with as_dict()

    Containers are converted recursively
    """
    # Order is important as bool is an int and IntEnum is both
    if val is None or isinstance(val, (float, str, bool)):
        return val
    elif isinstance(val, enum.IntEnum):
        return val.name
    elif isinstance(val, enum.Enum):
        return val.value
    elif isinstance(val, Fraction):
        return str(val)
    elif isinstance(val, (int, np.integer)):
        val = int(val)
        if abs(val) >= JSON_SAFE_INT:
            return str(val)
        return val
    elif isinstance(val, np.ndarray):
        return [prep_for_json(v) for v in val.tolist()]
    elif isinstance(val, dict):
        return {str(k): prep_for_json(v) for k, v in val.items()}
    elif isinstance(val, (list, tuple)):
        return [prep_for_json(v) for v in val]
    elif hasattr(val, 'as_dict'):
        return prep_for_json(val.as_dict())
    else:
        return val


def canonical_json(val, indent: Optional[int] = 2) -> str:
    """
    Sorted keys and a trailing newline, so that identical inputs
    produce byte-identical files
    """
    return json.dumps(prep_for_json(val), sort_keys=True,
                      indent=indent, ensure_ascii=True) + '\n'


def write_json(path: str, val, indent: Optional[int] = 2):
    with open(path, 'w') as fh:
        fh.write(canonical_json(val, indent=indent))
