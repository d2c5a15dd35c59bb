"""
Configuration settings for the metric fractal lab.
"""

import os
from dataclasses import dataclass, field


def _env_int(name: str, default: int) -> int:
    """Read a positive integer from the environment."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


@dataclass
class GenerationConfig:
    """Graph generation limits."""

    max_edges: int = 10**7

    @classmethod
    def from_env(cls) -> "GenerationConfig":
        """Load generation limits from environment variables."""
        return cls(max_edges=_env_int("MFL_MAX_EDGES", 10**7))


@dataclass
class AnalysisConfig:
    """Limits for ball scans and cycle enumeration."""

    scan_limit: int = 10**6  # (center, radius) pairs
    cycle_cap: int = 10**6
    clique_limit: int = 128  # largest ball for the exact pair-capacity certificate

    @classmethod
    def from_env(cls) -> "AnalysisConfig":
        """Load analysis limits from environment variables."""
        return cls(
            scan_limit=_env_int("MFL_SCAN_LIMIT", 10**6),
            cycle_cap=_env_int("MFL_CYCLE_CAP", 10**6),
        )


@dataclass
class SolverConfig:
    """Defaults for the distortion solvers."""

    node_budget: int = 10**7
    iterations: int = 2000
    restarts: int = 8
    seed: int = 0
    workers: int = 1
    subset_samples: int = 20
    exact_source_limit: int = 8  # growth runs also use the exact solver up to this size

    @classmethod
    def from_env(cls) -> "SolverConfig":
        """Load solver defaults from environment variables."""
        seed = os.getenv("MFL_SEED")
        return cls(
            node_budget=_env_int("MFL_NODE_BUDGET", 10**7),
            iterations=_env_int("MFL_ITERATIONS", 2000),
            seed=int(seed) if seed else 0,
            workers=_env_int("MFL_WORKERS", 1),
        )


@dataclass
class LabConfig:
    """Main configuration."""

    generation: GenerationConfig = field(default_factory=GenerationConfig)
    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    solver: SolverConfig = field(default_factory=SolverConfig)
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "LabConfig":
        """Load the full configuration from environment variables."""
        return cls(
            generation=GenerationConfig.from_env(),
            analysis=AnalysisConfig.from_env(),
            solver=SolverConfig.from_env(),
            log_level=os.getenv("MFL_LOG_LEVEL", "WARNING"),
        )

    @classmethod
    def default(cls) -> "LabConfig":
        """Get default configuration."""
        return cls()
