"""
Distances, diameters, balls and doubling analysis.
"""

from .shortest_paths import (
    UNREACHED,
    ball,
    bfs_hops,
    diameter,
    diameter_hops,
    distance_oracle,
    hop_matrix,
    is_connected,
    oracle_hops,
    pairwise_hops,
    radius_to_hops,
    sssp,
    sssp_many,
)
from .doubling import (
    SCAN_ALL_BALLS,
    STRATEGIES,
    WITNESS_BOTTOM_BALL,
    BallCover,
    doubling_bounds,
    geometry_profile,
)

__all__ = [
    "UNREACHED",
    "ball",
    "bfs_hops",
    "diameter",
    "diameter_hops",
    "distance_oracle",
    "hop_matrix",
    "is_connected",
    "oracle_hops",
    "pairwise_hops",
    "radius_to_hops",
    "sssp",
    "sssp_many",
    "SCAN_ALL_BALLS",
    "STRATEGIES",
    "WITNESS_BOTTOM_BALL",
    "BallCover",
    "doubling_bounds",
    "geometry_profile",
]
