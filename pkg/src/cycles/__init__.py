"""
Cycle structure of diamond and Laakso graphs.
"""

from .principal import classify_cycle, enumerate_simple_cycles, principal_cycle
from .laakso import (
    QUAD_SIDES,
    canonical_cycle,
    central_cycle,
    check_isometric,
    cycle_family,
    default_root_copy,
    isometric_cycle,
)
from .collapse import collapse_subdiamonds, path_address, quotient_violations, subdivide

__all__ = [
    "classify_cycle",
    "enumerate_simple_cycles",
    "principal_cycle",
    "QUAD_SIDES",
    "canonical_cycle",
    "central_cycle",
    "check_isometric",
    "cycle_family",
    "default_root_copy",
    "isometric_cycle",
    "collapse_subdiamonds",
    "path_address",
    "quotient_violations",
    "subdivide",
]
