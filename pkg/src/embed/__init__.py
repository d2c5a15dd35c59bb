"""
Distortion of maps between graphs: evaluation, exact and heuristic
search, lower bounds and explicit constructions.
"""

from .distortion import PairScan, distortion_of, evaluate
from .orbits import automorphism_orbits, orbit_representatives
from .exact_solver import (
    DistortionSearch,
    bfs_order,
    min_distortion_exact,
    min_distortion_on_matrix,
    verify_certificate,
)
from .heuristic import local_search, min_distortion_heuristic, restart_seed
from .lower_bound import SUBSET_SIZES, distortion_lower_bound
from .constructions import (
    construct_l1_to_d2,
    construct_m_embedding,
    m_address_to_diamond,
)
from .experiments import growth_experiment

__all__ = [
    "PairScan",
    "distortion_of",
    "evaluate",
    "automorphism_orbits",
    "orbit_representatives",
    "DistortionSearch",
    "bfs_order",
    "min_distortion_exact",
    "min_distortion_on_matrix",
    "verify_certificate",
    "local_search",
    "min_distortion_heuristic",
    "restart_seed",
    "SUBSET_SIZES",
    "distortion_lower_bound",
    "construct_l1_to_d2",
    "construct_m_embedding",
    "m_address_to_diamond",
    "growth_experiment",
]
