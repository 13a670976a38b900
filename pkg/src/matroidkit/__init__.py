"""matroidkit: exact matroid computations at desk scale.

Kernel backends (uniform, linear over prime fields, graphic, basis lists,
lazy duals and minors), Tutte connectivity with certified separations,
pinned minor search, vertically contractible elements, cocircuit
configuration and web-pattern detection, an executable statement harness,
and finite roundedness decision procedures.
"""

from .connectivity import Separation, find_separation, is_3connected, is_connected
from .core import Matroid, SubsetRecord, default_labels
from .errors import (CheckTimeout, InputError, MatroidError, ParseError,
                     ResourceLimitError)
from .iso import are_isomorphic, isomorphism
from .minors import (MinorWitness, VncReport, has_minor, is_vnc_set,
                     si_after_contraction, verify_witness, vnc_elements)
from .structures import (Configuration, WebRecord, find_configurations,
                         find_webs, rank3_cocircuits)

__version__ = "0.1.0"

__all__ = [
    "Matroid", "SubsetRecord", "Separation", "MinorWitness", "VncReport",
    "Configuration", "WebRecord", "default_labels",
    "find_separation", "is_3connected", "is_connected",
    "isomorphism", "are_isomorphic",
    "has_minor", "verify_witness", "vnc_elements", "is_vnc_set",
    "si_after_contraction", "find_configurations", "find_webs",
    "rank3_cocircuits",
    "MatroidError", "InputError", "ResourceLimitError", "ParseError",
    "CheckTimeout",
    "__version__",
]
