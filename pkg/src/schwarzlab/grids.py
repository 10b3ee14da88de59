"""Polar sample grids over the unit disk.

Suprema of the weighted derivative moduli live at the boundary, so the
radial nodes are Chebyshev-Lobatto points on [0, r_max]: they include
both endpoints and cluster where the action is.  Angles are uniform and
include 0, where the extremal constructions of this package attain
their maxima on the positive real axis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

R_MAX_DEFAULT = 1.0 - 1e-4


@dataclass(frozen=True)
class GridConfig:
    """Polar scan resolution and refinement budget."""

    n_radii: int = 64
    n_angles: int = 256
    r_max: float = R_MAX_DEFAULT
    refine_iters: int = 40
    refine_tol: float = 1e-12

    def __post_init__(self):
        if not 0.0 < self.r_max < 1.0:
            raise ValueError(f"r_max must lie in (0, 1), got {self.r_max}")
        if self.n_radii < 2 or self.n_angles < 2:
            raise ValueError("need at least 2 radii and 2 angles")

    def with_r_max(self, r_max: float) -> "GridConfig":
        return GridConfig(self.n_radii, self.n_angles, r_max, self.refine_iters, self.refine_tol)


def chebyshev_radii(n: int, r_max: float) -> np.ndarray:
    """n Chebyshev-Lobatto radii on [0, r_max], ascending, endpoints included."""
    j = np.arange(n)
    return r_max * (1.0 - np.cos(np.pi * j / (n - 1))) / 2.0


def uniform_angles(m: int) -> np.ndarray:
    """m equispaced angles on [0, 2*pi), starting at 0."""
    return 2.0 * np.pi * np.arange(m) / m


def polar_points(cfg: GridConfig, r_cap: float | None = None) -> np.ndarray:
    """All grid points r*e^{i*theta} as a flat complex array."""
    r_max = cfg.r_max if r_cap is None else min(cfg.r_max, r_cap)
    r = chebyshev_radii(cfg.n_radii, r_max)
    t = uniform_angles(cfg.n_angles)
    return (r[:, None] * np.exp(1j * t)[None, :]).ravel()
