"""Random surface configurations with slopes bounded away from zero.

Profiles are cubic Taylor polynomials pinned at the evaluation point, so the
drawn derivative values are exact there and the configuration is usable on
finite-difference stencils around it.
"""

import numpy as np

from .functions import C3Function
from .norms import NormParams


def counter_rng(seed: int) -> np.random.Generator:
    """Counter-based generator (Philox) keyed by the run seed."""
    return np.random.Generator(np.random.Philox(key=seed))


def random_translation_config(
    rng: np.random.Generator,
    m: int,
    n: int,
    slope_low: float = 0.3,
    slope_high: float = 1.5,
):
    """(profiles, point, params) for a random translation graph."""
    u = rng.uniform(-1.0, 1.0, n)
    d1 = rng.uniform(slope_low, slope_high, n) * rng.choice([-1.0, 1.0], n)
    d2 = rng.uniform(-1.0, 1.0, n)
    d3 = rng.uniform(-1.0, 1.0, n)
    f0 = rng.uniform(-1.0, 1.0, n)
    fs = tuple(
        C3Function.taylor(ui, (a, b, c, d))
        for ui, a, b, c, d in zip(u, f0, d1, d2, d3)
    )
    return fs, u, NormParams(m=m, dim=n + 1)


def random_separable_config(
    rng: np.random.Generator,
    m: int,
    n: int,
    slope_low: float = 0.3,
    slope_high: float = 1.5,
):
    """(profiles, on-surface point, params) for a random separable surface."""
    dim = n + 1
    x = rng.uniform(-1.0, 1.0, dim)
    d1 = rng.uniform(slope_low, slope_high, dim) * rng.choice([-1.0, 1.0], dim)
    d2 = rng.uniform(-1.0, 1.0, dim)
    d3 = rng.uniform(-1.0, 1.0, dim)
    f0 = rng.uniform(-1.0, 1.0, dim)
    f0[-1] = -f0[:-1].sum()  # pin the point onto the surface
    fs = tuple(
        C3Function.taylor(xi, (a, b, c, d))
        for xi, a, b, c, d in zip(x, f0, d1, d2, d3)
    )
    return fs, x, NormParams(m=m, dim=dim)
