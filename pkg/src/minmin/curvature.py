"""Mean curvature and Weingarten coefficients under the 2m-norm.

Two closed-form routes are implemented: translation graphs x_{n+1} = sum f_i(u_i)
and separable implicit surfaces sum f_i(x_i) = 0.  An independent oracle
recovers the mean curvature from its definition H = trace(d eta)/n by central
differencing the Birkhoff normal along a chart and expanding the derivative in
the tangent basis.

Orientation follows the normal branches of the norms module: upward for graphs,
aligned with the defining gradient for implicit surfaces.  At m = 1 the graph
value is minus the textbook Euclidean mean curvature computed with respect to
the upward normal and the shape operator -dN.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    OffSurfaceError,
    SingularConfigurationError,
)
from .norms import (
    NormParams,
    birkhoff_normal_graph,
    birkhoff_normal_implicit,
    signed_pow,
)

_EPS = np.finfo(float).eps

# Default oracle step: optimal for first-order central differences.
ORACLE_STEP_FACTOR = _EPS ** (1.0 / 3.0)


@dataclass
class WeingartenMatrix:
    """Coefficients eta_j^k of the normal's parameter derivatives in the tangent basis.

    entries[j, k] is the coefficient of the k-th tangent vector in the
    derivative of eta along the j-th parameter; trace/n is the mean curvature.
    """

    entries: np.ndarray

    @property
    def mean_curvature(self) -> float:
        return float(np.trace(self.entries)) / self.entries.shape[0]


@dataclass
class CurvatureReport:
    """Per-point comparison of closed-form and oracle mean curvature."""

    point: np.ndarray
    eta: np.ndarray
    weingarten: WeingartenMatrix | None
    h_analytic: float
    h_oracle: float
    tangency_defect: float
    tol: float

    @property
    def passed(self) -> bool:
        return (
            abs(self.h_analytic - self.h_oracle) <= self.tol * (1 + abs(self.h_analytic))
            and self.tangency_defect <= self.tol
        )


def _slope_guard(d1, m: int, label: str):
    """Negative fractional powers of the slopes appear only for m >= 2."""
    if m >= 2 and np.any(d1 == 0.0):
        raise SingularConfigurationError(
            f"{label}: a profile slope vanishes and m = {m} needs its negative power"
        )


def _derivs(fs, at):
    d1 = np.array([f.d1(t) for f, t in zip(fs, at)])
    d2 = np.array([f.d2(t) for f, t in zip(fs, at)])
    return d1, d2


# ---------------------------------------------------------------------------
# translation graphs
# ---------------------------------------------------------------------------


def translation_residual_sum(d1, d2, m: int) -> float:
    """sum_j (f_j')^(-(2m-2)/(2m-1)) f_j'' (1 + sum_{i!=j} (f_i')^(2m/(2m-1))).

    The minimality residual of a translation graph: it vanishes exactly where
    the mean curvature does, and stays polynomial in the slopes at m = 1.
    """
    d1 = np.asarray(d1, dtype=float)
    d2 = np.asarray(d2, dtype=float)
    _slope_guard(d1, m, "translation residual")
    X = np.array([signed_pow(v, 2 * m, 2 * m - 1) for v in d1])
    A = 1.0 + X.sum()
    terms = [
        signed_pow(d1[j], -(2 * m - 2), 2 * m - 1) * d2[j] * (A - X[j])
        for j in range(len(d1))
    ]
    return float(sum(terms))


def mean_curvature_translation(fs, u, p: NormParams) -> float:
    """Closed-form mean curvature of the translation graph sum f_i(u_i)."""
    u = np.asarray(u, dtype=float)
    if len(fs) != p.n or u.shape != (p.n,):
        raise DimensionMismatchError(
            f"expected {p.n} profiles and parameters, got {len(fs)} and {u.shape}"
        )
    m = p.m
    d1, d2 = _derivs(fs, u)
    _slope_guard(d1, m, "translation mean curvature")
    X = np.array([signed_pow(v, 2 * m, 2 * m - 1) for v in d1])
    A = 1.0 + X.sum()
    total = sum(
        signed_pow(d1[j], -(2 * m - 2), 2 * m - 1) * d2[j] * (A - X[j])
        for j in range(p.n)
    )
    return float(-(A ** (-(2 * m + 1) / (2 * m))) / (p.n * (2 * m - 1)) * total)


def weingarten_translation(fs, u, p: NormParams) -> WeingartenMatrix:
    """Weingarten coefficients of a translation graph.

    Diagonal:  eta_j^j = -A^(-(2m+1)/(2m))/(2m-1) (f_j')^(-(2m-2)/(2m-1)) f_j''
                         (1 + sum_{i!=j} (f_i')^(2m/(2m-1)))
    Off-diag:  eta_j^k = +A^(-(2m+1)/(2m))/(2m-1) (f_j')^(1/(2m-1)) f_j''
                         (f_k')^(1/(2m-1))
    """
    u = np.asarray(u, dtype=float)
    if len(fs) != p.n or u.shape != (p.n,):
        raise DimensionMismatchError(
            f"expected {p.n} profiles and parameters, got {len(fs)} and {u.shape}"
        )
    m = p.m
    n = p.n
    d1, d2 = _derivs(fs, u)
    _slope_guard(d1, m, "translation Weingarten")
    X = np.array([signed_pow(v, 2 * m, 2 * m - 1) for v in d1])
    A = 1.0 + X.sum()
    pref = A ** (-(2 * m + 1) / (2 * m)) / (2 * m - 1)
    root = np.array([signed_pow(v, 1, 2 * m - 1) for v in d1])
    W = np.empty((n, n))
    for j in range(n):
        for k in range(n):
            if j == k:
                W[j, j] = (
                    -pref
                    * signed_pow(d1[j], -(2 * m - 2), 2 * m - 1)
                    * d2[j]
                    * (A - X[j])
                )
            else:
                W[j, k] = pref * root[j] * d2[j] * root[k]
    return WeingartenMatrix(entries=W)


# ---------------------------------------------------------------------------
# separable implicit surfaces
# ---------------------------------------------------------------------------


def separable_residual_sum(d1, d2, m: int) -> float:
    """sum_j (f_j')^(-(2m-2)/(2m-1)) f_j'' (A - (f_j')^(2m/(2m-1))), A = sum X_i.

    The minimality residual of a separable surface; proportional to H by the
    positive factor n(2m-1) A^((2m+1)/(2m)).
    """
    d1 = np.asarray(d1, dtype=float)
    d2 = np.asarray(d2, dtype=float)
    _slope_guard(d1, m, "separable residual")
    X = np.array([signed_pow(v, 2 * m, 2 * m - 1) for v in d1])
    A = X.sum()
    return float(
        sum(
            signed_pow(d1[j], -(2 * m - 2), 2 * m - 1) * d2[j] * (A - X[j])
            for j in range(len(d1))
        )
    )


def _check_separable_point(fs, x, p: NormParams, on_surface_tol: float):
    x = np.asarray(x, dtype=float)
    if len(fs) != p.dim or x.shape != (p.dim,):
        raise DimensionMismatchError(
            f"expected {p.dim} profiles and coordinates, got {len(fs)} and {x.shape}"
        )
    value = sum(f(t) for f, t in zip(fs, x))
    if abs(value) > on_surface_tol:
        raise OffSurfaceError(
            f"sum f_i(x_i) = {value:.3e} exceeds tolerance {on_surface_tol:.1e}"
        )
    return x


def mean_curvature_separable(
    fs, x, p: NormParams, on_surface_tol: float = 1e-6
) -> float:
    """Closed-form mean curvature of the separable surface sum f_i(x_i) = 0.

    The chart solves the last coordinate in terms of the others, so its slope
    must not vanish; orientation is aligned with (f_1', ..., f_{n+1}').
    """
    x = _check_separable_point(fs, x, p, on_surface_tol)
    m = p.m
    d1, d2 = _derivs(fs, x)
    if d1[-1] == 0.0:
        raise SingularConfigurationError("chart slope f_{n+1}' vanishes")
    _slope_guard(d1, m, "separable mean curvature")
    X = np.array([signed_pow(v, 2 * m, 2 * m - 1) for v in d1])
    A = X.sum()
    total = sum(
        signed_pow(d1[j], -(2 * m - 2), 2 * m - 1) * d2[j] * (A - X[j])
        for j in range(p.dim)
    )
    return float(A ** (-(2 * m + 1) / (2 * m)) / (p.n * (2 * m - 1)) * total)


def weingarten_separable(
    fs, x, p: NormParams, on_surface_tol: float = 1e-6
) -> WeingartenMatrix:
    """Weingarten coefficients of a separable surface in the last-coordinate chart."""
    x = _check_separable_point(fs, x, p, on_surface_tol)
    m = p.m
    n = p.n
    d1, d2 = _derivs(fs, x)
    if d1[-1] == 0.0:
        raise SingularConfigurationError("chart slope f_{n+1}' vanishes")
    _slope_guard(d1, m, "separable Weingarten")
    X = np.array([signed_pow(v, 2 * m, 2 * m - 1) for v in d1])
    A = X.sum()
    pref = A ** (-(2 * m + 1) / (2 * m)) / (2 * m - 1)
    root = np.array([signed_pow(v, 1, 2 * m - 1) for v in d1])
    g_last = signed_pow(d1[n], -(2 * m - 2), 2 * m - 1) * d2[n]
    W = np.empty((n, n))
    for j in range(n):
        for k in range(n):
            if j == k:
                W[j, j] = pref * (
                    X[j] * g_last
                    + signed_pow(d1[j], -(2 * m - 2), 2 * m - 1) * d2[j] * (A - X[j])
                )
            else:
                W[j, k] = pref * root[k] * (d1[j] * g_last - root[j] * d2[j])
    return WeingartenMatrix(entries=W)


# ---------------------------------------------------------------------------
# charts and the finite-difference oracle
# ---------------------------------------------------------------------------


class GraphChart:
    """Graph hypersurface (u, f(u)) with a gradient evaluator."""

    def __init__(self, value_fn, grad_fn, p: NormParams):
        self.value_fn = value_fn
        self.grad_fn = grad_fn
        self.p = p

    def point(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        return np.append(t, self.value_fn(t))

    def tangents(self, t) -> np.ndarray:
        g = np.asarray(self.grad_fn(t), dtype=float)
        n = self.p.n
        T = np.zeros((self.p.dim, n))
        T[:n, :] = np.eye(n)
        T[n, :] = g
        return T

    def nu(self, t) -> np.ndarray:
        g = np.asarray(self.grad_fn(t), dtype=float)
        return np.append(-g, 1.0)

    def eta(self, t) -> np.ndarray:
        return birkhoff_normal_graph(self.grad_fn(t), self.p).eta


class SeparableChart:
    """Separable surface sum f_i(x_i) = 0 charted over the first n coordinates.

    The last coordinate is recovered by Newton iteration seeded at the base
    point's value, staying on the branch through the base point.
    """

    def __init__(self, fs, p: NormParams, base_point):
        self.fs = list(fs)
        self.p = p
        base_point = np.asarray(base_point, dtype=float)
        if base_point.shape != (p.dim,):
            raise DimensionMismatchError("base point must be an ambient point")
        self.base_last = float(base_point[-1])

    def _solve_last(self, t) -> float:
        f_last = self.fs[-1]
        rhs = -sum(f(ti) for f, ti in zip(self.fs[:-1], t))
        x = self.base_last
        for _ in range(80):
            val = f_last(x) - rhs
            der = f_last.d1(x)
            if der == 0.0:
                raise SingularConfigurationError("chart slope f_{n+1}' vanishes")
            step = val / der
            x -= step
            if abs(step) <= 1e-15 * (1.0 + abs(x)):
                break
        return x

    def point(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        return np.append(t, self._solve_last(t))

    def tangents(self, t) -> np.ndarray:
        x = self.point(t)
        d1 = np.array([f.d1(v) for f, v in zip(self.fs, x)])
        n = self.p.n
        T = np.zeros((self.p.dim, n))
        T[:n, :] = np.eye(n)
        T[n, :] = -d1[:n] / d1[n]
        return T

    def nu(self, t) -> np.ndarray:
        x = self.point(t)
        return np.array([f.d1(v) for f, v in zip(self.fs, x)])

    def eta(self, t) -> np.ndarray:
        x = self.point(t)
        grad = np.array([f.d1(v) for f, v in zip(self.fs, x)])
        return birkhoff_normal_implicit(grad, self.p).eta


def mean_curvature_oracle(chart, point, p: NormParams, h: float | None = None):
    """Mean curvature from the definition trace(d eta)/n by central differences.

    The normal's derivative along each parameter is expanded in the basis
    (tangent vectors, unit Euclidean normal); the mean of the j-th tangent
    coefficients is the oracle value and the largest normal coefficient is the
    tangency defect, which vanishes in exact arithmetic.

    Returns (h_oracle, tangency_defect).
    """
    t0 = np.asarray(point, dtype=float)
    n = p.n
    if t0.shape != (n,):
        raise DimensionMismatchError(f"point must have {n} parameters")
    T = chart.tangents(t0)
    nu = chart.nu(t0)
    nu_hat = nu / np.linalg.norm(nu)
    basis = np.column_stack([T, nu_hat])
    diag_sum = 0.0
    defect = 0.0
    for j in range(n):
        hj = ORACLE_STEP_FACTOR * (1.0 + abs(t0[j])) if h is None else h
        tp = t0.copy()
        tp[j] += hj
        tm = t0.copy()
        tm[j] -= hj
        ep = chart.eta(tp)
        em = chart.eta(tm)
        if not (np.all(np.isfinite(ep)) and np.all(np.isfinite(em))):
            raise SingularConfigurationError("non-finite normal at stencil point")
        deta = (ep - em) / (2 * hj)
        coef = np.linalg.solve(basis, deta)
        diag_sum += coef[j]
        defect = max(defect, abs(coef[n]))
    return float(diag_sum / n), float(defect)


def report_translation(
    fs, u, p: NormParams, tol: float = 1e-6, h: float | None = None
) -> CurvatureReport:
    """Closed-form vs oracle comparison at one translation-graph point."""
    u = np.asarray(u, dtype=float)
    chart = GraphChart(
        value_fn=lambda t: sum(f(ti) for f, ti in zip(fs, t)),
        grad_fn=lambda t: np.array([f.d1(ti) for f, ti in zip(fs, t)]),
        p=p,
    )
    h_oracle, defect = mean_curvature_oracle(chart, u, p, h=h)
    return CurvatureReport(
        point=u,
        eta=chart.eta(u),
        weingarten=weingarten_translation(fs, u, p),
        h_analytic=mean_curvature_translation(fs, u, p),
        h_oracle=h_oracle,
        tangency_defect=defect,
        tol=tol,
    )


def report_separable(
    fs, x, p: NormParams, tol: float = 1e-6, h: float | None = None,
    on_surface_tol: float = 1e-6,
) -> CurvatureReport:
    """Closed-form vs oracle comparison at one separable-surface point."""
    x = np.asarray(x, dtype=float)
    chart = SeparableChart(fs, p, x)
    h_oracle, defect = mean_curvature_oracle(chart, x[:-1], p, h=h)
    return CurvatureReport(
        point=x,
        eta=chart.eta(x[:-1]),
        weingarten=weingarten_separable(fs, x, p, on_surface_tol=on_surface_tol),
        h_analytic=mean_curvature_separable(fs, x, p, on_surface_tol=on_surface_tol),
        h_oracle=h_oracle,
        tangency_defect=defect,
        tol=tol,
    )
