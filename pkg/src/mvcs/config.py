"""Scoring configuration.

All free parameters of the pipeline live in one frozen dataclass so that every
report can echo the exact settings it was produced with.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

WEIGHT_SUM_TOL = 1e-12


@dataclass(frozen=True)
class ScoreConfig:
    """Free parameters of the clusterability pipeline.

    Attributes
    ----------
    tau : float
        Sensitivity of the critical-bandwidth-to-score transform. Larger
        values compress scores toward zero.
    k : int
        Neighbor count for the cross-view consistency component. Must be
        smaller than the instance count of any dataset it is applied to.
    alpha, beta, gamma : float
        Non-negative weights of the per-view, joint, and neighborhood
        components. Must sum to one.
    eta : float
        Scale of the final calibration transform.
    grid_points : int
        Resolution of the density evaluation grid used for mode counting.
    bisect_rel_tol : float
        Relative tolerance of the critical-bandwidth bisection.
    seed : int
        Base seed for all randomized operations (64-bit unsigned).
    """

    tau: float = 1.0
    k: int = 10
    alpha: float = 0.2
    beta: float = 0.2
    gamma: float = 0.6
    eta: float = 0.5
    grid_points: int = 1024
    bisect_rel_tol: float = 1e-3
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.tau > 0:
            raise ValueError(f"tau must be positive, got {self.tau}")
        if self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k}")
        for name in ("alpha", "beta", "gamma"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        weight_sum = self.alpha + self.beta + self.gamma
        if abs(weight_sum - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError(
                f"alpha + beta + gamma must equal 1, got {weight_sum!r}"
            )
        if not self.eta > 0:
            raise ValueError(f"eta must be positive, got {self.eta}")
        if self.grid_points < 64:
            raise ValueError(f"grid_points must be >= 64, got {self.grid_points}")
        if not self.bisect_rel_tol > 0:
            raise ValueError(
                f"bisect_rel_tol must be positive, got {self.bisect_rel_tol}"
            )
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {self.seed}")

    def to_dict(self) -> dict:
        return asdict(self)
