"""The 2m-norm on R^(n+1): gauge function, signed fractional powers, Birkhoff normals.

The norm is ||x|| = (sum_i x_i^(2m))^(1/(2m)) for a positive integer m; m = 1 is
the Euclidean norm.  The Birkhoff normal of a hypersurface is the unit vector
whose tangent space on the unit sphere is parallel to the surface's tangent
space; it is characterised by grad(Phi) at the normal being a positive multiple
of the Euclidean normal direction, where Phi(x) = sum_i x_i^(2m).

All fractional powers carry exponents as integer pairs (num, den) with odd den,
so that negative bases take the real odd root instead of a float NaN.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePointError, DimensionMismatchError, DomainError


@dataclass(frozen=True)
class NormParams:
    """Norm exponent parameter m and ambient dimension dim = n + 1 (>= 3)."""

    m: int
    dim: int

    def __post_init__(self):
        if not isinstance(self.m, (int, np.integer)) or self.m < 1:
            raise DomainError(f"m must be a positive integer, got {self.m!r}")
        if not isinstance(self.dim, (int, np.integer)) or self.dim < 3:
            raise DomainError(f"dim must be an integer >= 3, got {self.dim!r}")

    @property
    def n(self) -> int:
        """Number of surface parameters (dim - 1)."""
        return self.dim - 1


@dataclass(frozen=True)
class BirkhoffNormal:
    """Unit Birkhoff normal eta together with the normalizer A^(-1/(2m))."""

    eta: np.ndarray
    scale: float


def _check_dim(x: np.ndarray, expected: int, what: str = "vector"):
    if x.shape != (expected,):
        raise DimensionMismatchError(
            f"{what} has shape {x.shape}, expected ({expected},)"
        )
    if not np.all(np.isfinite(x)):
        raise DomainError(f"{what} has non-finite entries")


def phi(x, p: NormParams) -> float:
    """Gauge function: sum of 2m-th powers of the coordinates."""
    x = np.asarray(x, dtype=float)
    _check_dim(x, p.dim)
    return float(np.sum(x ** (2 * p.m)))


def norm_2m(x, p: NormParams) -> float:
    """The 2m-norm, phi(x)^(1/(2m))."""
    return phi(x, p) ** (1.0 / (2 * p.m))


def grad_phi(x, p: NormParams) -> np.ndarray:
    """Gradient of the gauge function: component i is 2m * x_i^(2m-1)."""
    x = np.asarray(x, dtype=float)
    _check_dim(x, p.dim)
    return 2 * p.m * x ** (2 * p.m - 1)


def signed_pow(x: float, num: int, den: int) -> float:
    """Real power x^(num/den) with odd den, through the signed real root.

    Returns sign(x)^num * |x|^(num/den).  Continuous at 0 for num > 0; num = 0
    gives 1; a zero base with num < 0 is a domain error.
    """
    if den <= 0 or den % 2 == 0:
        raise DomainError(f"denominator must be an odd positive integer, got {den}")
    if x == 0.0:
        if num > 0:
            return 0.0
        if num == 0:
            return 1.0
        raise DomainError("zero base with negative exponent")
    s = -1.0 if (x < 0.0 and num % 2 != 0) else 1.0
    return s * abs(x) ** (num / den)


def signed_pow_vec(x: np.ndarray, num: int, den: int) -> np.ndarray:
    """Elementwise signed_pow over an array."""
    x = np.asarray(x, dtype=float)
    return np.array([signed_pow(v, num, den) for v in x.ravel()]).reshape(x.shape)


def signed_pow_deriv(x: float, num: int, den: int) -> float:
    """d/dx of signed_pow(x, num, den) = (num/den) * signed_pow(x, num - den, den)."""
    return (num / den) * signed_pow(x, num - den, den)


def birkhoff_normal_graph(grad_f, p: NormParams) -> BirkhoffNormal:
    """Birkhoff normal of a graph hypersurface from the gradient of its height.

    For the graph (u, f(u)) the normal is
        eta = A^(-1/(2m)) * (-(f_u1)^(1/(2m-1)), ..., -(f_un)^(1/(2m-1)), 1)
    with A = 1 + sum_i (f_ui)^(2m/(2m-1)).  The last coordinate of eta is
    positive (upward orientation); grad(Phi) at eta is a positive multiple of
    (-grad_f, 1).
    """
    g = np.asarray(grad_f, dtype=float)
    _check_dim(g, p.dim - 1, "grad_f")
    m = p.m
    A = 1.0 + sum(signed_pow(v, 2 * m, 2 * m - 1) for v in g)
    scale = A ** (-1.0 / (2 * m))
    comps = [-signed_pow(v, 1, 2 * m - 1) for v in g] + [1.0]
    return BirkhoffNormal(eta=scale * np.array(comps), scale=scale)


def birkhoff_normal_implicit(grad_F, p: NormParams) -> BirkhoffNormal:
    """Birkhoff normal of an implicit hypersurface from its defining gradient.

    eta = A^(-1/(2m)) * ((F_1)^(1/(2m-1)), ..., (F_dim)^(1/(2m-1))) with
    A = sum_i (F_i)^(2m/(2m-1)); grad(Phi) at eta is a positive multiple of
    grad_F.  A zero gradient has no normal direction.
    """
    g = np.asarray(grad_F, dtype=float)
    _check_dim(g, p.dim, "grad_F")
    m = p.m
    A = sum(signed_pow(v, 2 * m, 2 * m - 1) for v in g)
    if A == 0.0:
        raise DegeneratePointError("zero gradient: degenerate point")
    scale = A ** (-1.0 / (2 * m))
    comps = [signed_pow(v, 1, 2 * m - 1) for v in g]
    return BirkhoffNormal(eta=scale * np.array(comps), scale=scale)
