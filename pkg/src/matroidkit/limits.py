"""Enumeration caps.

Exhaustive subset scans (circuits, separations, minor search) refuse to run
above these bounds instead of answering heuristically.  The general bound can
be overridden through the MATROID_CAPS environment variable.
"""

import os

DEFAULT_ENUM_BOUND = 20
ISO_BOUND = 12
MINOR_SIZE_BOUND = 12
MINOR_GAP_BOUND = 8
MAX_FIELD_PRIME = 13


def enumeration_bound() -> int:
    raw = os.environ.get("MATROID_CAPS")
    if raw is None:
        return DEFAULT_ENUM_BOUND
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_ENUM_BOUND
    return value if value > 0 else DEFAULT_ENUM_BOUND
