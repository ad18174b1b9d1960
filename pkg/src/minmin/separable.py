"""Separable minimal hypersurfaces: substitution profiles, ansatz systems, patches.

A separable surface sum f_i(x_i) = 0 is minimal iff, after substituting
u_i = f_i(x_i) and X_i(u_i) = (f_i')^(2m/(2m-1)), the algebraic identity

    sum_j X_j'(u_j) * (A - X_j(u_j)) = 0,      A = sum_i X_i,

holds for all u on the zero-sum hyperplane u_1 + ... + u_{n+1} = 0.  The
surface itself is recovered from positive profiles X_i by the quadrature
x_i = +/- integral of X_i^(-(2m-1)/(2m)).

This module expands the identity for affine, quadratic and exponential profile
families into canonical coefficient systems, builds surface patches by
composite quadrature, and provides factories for the catalogue of closed-form
minimal examples (power sums, mixed-coefficient power sums, the hyperbolic
exponential surface and the ratio surface x2 x3 = +/- x1 x4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .curvature import separable_residual_sum
from .errors import (
    ConstraintViolationError,
    DimensionMismatchError,
    DomainError,
    EmptyDomainError,
    NonpositiveProfileError,
)
from .functions import C3Function
from .norms import NormParams


# ---------------------------------------------------------------------------
# X-profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class XProfile:
    """A substituted slope profile X(u) = (f')^(2m/(2m-1)), positive on its domain.

    kind is one of affine (p + q u), quadratic (p + q u + r u^2), exponential
    (q e^u + r e^-u) or custom.  params keeps (p, q, r) as applicable.
    """

    kind: str
    params: tuple
    _eval: object = field(repr=False)
    _deriv: object = field(repr=False)
    _deriv2: object = field(repr=False)

    def value(self, u: float) -> float:
        return float(self._eval(u))

    def deriv(self, u: float) -> float:
        return float(self._deriv(u))

    def deriv2(self, u: float) -> float:
        return float(self._deriv2(u))

    @classmethod
    def affine(cls, p: float, q: float) -> "XProfile":
        return cls("affine", (p, q), lambda u: p + q * u, lambda u: q, lambda u: 0.0)

    @classmethod
    def quadratic(cls, p: float, q: float, r: float) -> "XProfile":
        return cls(
            "quadratic",
            (p, q, r),
            lambda u: p + q * u + r * u * u,
            lambda u: q + 2 * r * u,
            lambda u: 2 * r,
        )

    @classmethod
    def exponential(cls, q: float, r: float) -> "XProfile":
        return cls(
            "exponential",
            (q, r),
            lambda u: q * math.exp(u) + r * math.exp(-u),
            lambda u: q * math.exp(u) - r * math.exp(-u),
            lambda u: q * math.exp(u) + r * math.exp(-u),
        )

    @classmethod
    def custom(cls, eval_fn, deriv_fn, deriv2_fn=None) -> "XProfile":
        d2 = deriv2_fn if deriv2_fn is not None else lambda u: 0.0
        return cls("custom", (), eval_fn, deriv_fn, d2)

    def positive_interval(self) -> tuple | None:
        """Largest open interval where X > 0, or None when X is never positive.

        For quadratic profiles with two positivity components the component
        containing the vertex-side reference 0 is returned when positive there.
        """
        inf = math.inf
        if self.kind == "affine":
            p, q = self.params
            if q > 0:
                return (-p / q, inf)
            if q < 0:
                return (-inf, -p / q)
            return (-inf, inf) if p > 0 else None
        if self.kind == "exponential":
            q, r = self.params
            if q > 0 and r >= 0 or q >= 0 and r > 0:
                return (-inf, inf)
            if q > 0 and r < 0:
                return (0.5 * math.log(-r / q), inf)
            if q < 0 and r > 0:
                return (-inf, 0.5 * math.log(r / -q))
            return None
        if self.kind == "quadratic":
            p, q, r = self.params
            if r == 0:
                return XProfile.affine(p, q).positive_interval()
            disc = q * q - 4 * r * p
            if disc < 0:
                return (-inf, inf) if r > 0 else None
            s = math.sqrt(disc)
            lo, hi = sorted(((-q - s) / (2 * r), (-q + s) / (2 * r)))
            if r < 0:
                return (lo, hi)
            # positive outside [lo, hi]: pick the component containing 0
            if self.value(0.0) > 0:
                return (-inf, lo) if 0.0 < lo else (hi, inf)
            return (hi, inf)
        # custom: probe around 0
        if self.value(0.0) <= 0:
            return None
        lo, hi = -1.0, 1.0
        for _ in range(60):
            if self.value(lo) <= 0 or lo < -1e8:
                break
            lo *= 2
        for _ in range(60):
            if self.value(hi) <= 0 or hi > 1e8:
                break
            hi *= 2
        return (lo, hi)


def minimality_identity_residual(xs, u) -> float:
    """sum_j X_j'(u_j) (A - X_j(u_j)) on the zero-sum hyperplane; zero iff minimal."""
    u = np.asarray(u, dtype=float)
    if len(xs) != len(u):
        raise DimensionMismatchError(f"need {len(xs)} parameter values")
    if abs(u.sum()) > 1e-12 * max(1.0, np.max(np.abs(u))):
        raise ConstraintViolationError(f"sum u = {u.sum():.3e} is not zero")
    vals = np.array([x.value(t) for x, t in zip(xs, u)])
    if np.any(vals <= 0.0):
        raise NonpositiveProfileError("X_i(u_i) must be positive")
    derivs = np.array([x.deriv(t) for x, t in zip(xs, u)])
    A = vals.sum()
    return float(np.sum(derivs * (A - vals)))


# ---------------------------------------------------------------------------
# identity expansion engine
# ---------------------------------------------------------------------------


def _poly_add(a: dict, b: dict, s: float = 1.0) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0.0) + s * v
    return out


def _poly_mul(a: dict, b: dict) -> dict:
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            out[k] = out.get(k, 0.0) + va * vb
    return out


def _expand_polynomial_identity(pqr, n: int) -> dict:
    """Expand the minimality identity for polynomial X_i over u_1..u_n.

    pqr is a list of n+1 coefficient tuples (constant, linear, quadratic);
    the last variable is eliminated by u_{n+1} = -(u_1 + ... + u_n).  Returns
    a dict mapping monomial exponent tuples to raw coefficients.
    """
    zero = (0,) * n

    def var(i: int) -> dict:
        if i < n:
            return {tuple(1 if j == i else 0 for j in range(n)): 1.0}
        return {tuple(1 if j == i2 else 0 for j in range(n)): -1.0 for i2 in range(n)}

    X, Xp = [], []
    for i, coeffs in enumerate(pqr):
        p0, q0, r0 = coeffs
        ui = var(i)
        Xi = _poly_add({zero: p0}, ui, q0)
        Xi = _poly_add(Xi, _poly_mul(ui, ui), r0)
        X.append(Xi)
        Xp.append(_poly_add({zero: q0}, ui, 2 * r0))
    A = {}
    for Xi in X:
        A = _poly_add(A, Xi)
    total = {}
    for j in range(len(pqr)):
        total = _poly_add(total, _poly_mul(Xp[j], _poly_add(A, X[j], -1.0)))
    scale = max(1.0, max(abs(v) for c in pqr for v in c)) ** 2
    return {k: v for k, v in total.items() if abs(v) > 1e-13 * scale}


def _expand_exponential_identity(q, r, n: int = 3) -> dict:
    """Expand the identity for X_i = q_i e^u + r_i e^-u over exponent vectors."""

    def term(i: int, sign: int) -> tuple:
        # exponent vector of e^(sign * u_i) after eliminating u_{n+1}
        if i < n:
            return tuple(sign if j == i else 0 for j in range(n))
        return tuple(-sign for _ in range(n))

    X, Xp = [], []
    for i in range(n + 1):
        X.append({term(i, +1): q[i], term(i, -1): r[i]})
        Xp.append({term(i, +1): q[i], term(i, -1): -r[i]})
    A = {}
    for Xi in X:
        A = _poly_add(A, Xi)
    total = {}
    for j in range(n + 1):
        total = _poly_add(total, _poly_mul(Xp[j], _poly_add(A, X[j], -1.0)))
    scale = max(1.0, max(abs(v) for v in q), max(abs(v) for v in r)) ** 2
    return {k: v for k, v in total.items() if abs(v) > 1e-13 * scale}


@dataclass
class AnsatzSystem:
    """Canonical coefficient system extracted from the minimality identity.

    coefficients maps canonical basis tags to values normalised the way the
    systems are usually displayed (repeated monomials share one entry); the
    raw expansion is kept so that evaluate() reproduces the identity exactly.
    """

    kind: str
    n: int
    coefficients: dict
    raw: dict

    def max_abs(self) -> float:
        return max((abs(v) for v in self.coefficients.values()), default=0.0)

    def evaluate(self, u_full) -> float:
        """Value of the reconstructed identity at a zero-sum parameter point."""
        u_full = np.asarray(u_full, dtype=float)
        if abs(u_full.sum()) > 1e-10 * max(1.0, np.max(np.abs(u_full))):
            raise ConstraintViolationError("parameters must sum to zero")
        u = u_full[: self.n]
        total = 0.0
        if self.kind == "exponential":
            for vec, c in self.raw.items():
                total += c * math.exp(float(np.dot(vec, u)))
        else:
            for mono, c in self.raw.items():
                total += c * float(np.prod(u ** np.array(mono)))
        return total


def _mono(n: int, *idx) -> tuple:
    e = [0] * n
    for i in idx:
        e[i] += 1
    return tuple(e)


def extract_affine_system(n: int, p, q) -> AnsatzSystem:
    """Coefficients of the identity for affine X_i = p_i + q_i u_i, all q_i != 0.

    The identity collapses to constant + linear terms; the linear coefficient
    of u_l factors as (q_l - q_{n+1}) (sum of the remaining q).
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != (n + 1,) or q.shape != (n + 1,):
        raise DimensionMismatchError(f"need {n + 1} values of p and q")
    if np.any(q == 0.0):
        raise DomainError("affine profiles require q_i != 0")
    raw = _expand_polynomial_identity([(pi, qi, 0.0) for pi, qi in zip(p, q)], n)
    coeffs = {"1": raw.get((0,) * n, 0.0)}
    for l in range(n):
        coeffs[f"u{l + 1}"] = raw.get(_mono(n, l), 0.0)
    return AnsatzSystem(kind="affine", n=n, coefficients=coeffs, raw=raw)


_QUAD_TAGS = (
    "1",
    "u1", "u2", "u3",
    "u1^2", "u2^2", "u3^2",
    "u1*u2", "u1*u3", "u2*u3",
    "u1^2*u2+u1*u2^2", "u1^2*u3+u1*u3^2", "u2^2*u3+u2*u3^2",
    "u1*u2*u3",
)


def extract_quadratic_system(p, q, r) -> AnsatzSystem:
    """Coefficients for quadratic X_i = p_i + q_i u_i + r_i u_i^2 (n = 3).

    Returns the fourteen canonical entries; mixed monomials are normalised by
    their multiplicity (2 for u_j u_k and the symmetric cubic pairs, 4 for
    u_1 u_2 u_3), so each entry is the common per-monomial coefficient.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    r = np.asarray(r, dtype=float)
    if not (p.shape == q.shape == r.shape == (4,)):
        raise DimensionMismatchError("quadratic case needs 4 values of p, q, r")
    n = 3
    raw = _expand_polynomial_identity(list(zip(p, q, r)), n)
    scale = max(1.0, float(np.max(np.abs(np.concatenate([p, q, r]))))) ** 2
    coeffs = {"1": raw.get((0, 0, 0), 0.0)}
    for l in range(3):
        coeffs[f"u{l + 1}"] = raw.get(_mono(n, l), 0.0)
    for l in range(3):
        coeffs[f"u{l + 1}^2"] = raw.get(_mono(n, l, l), 0.0)
    for (a, b) in ((0, 1), (0, 2), (1, 2)):
        coeffs[f"u{a + 1}*u{b + 1}"] = raw.get(_mono(n, a, b), 0.0) / 2.0
    for (a, b) in ((0, 1), (0, 2), (1, 2)):
        c_ab = raw.get(_mono(n, a, a, b), 0.0)
        c_ba = raw.get(_mono(n, a, b, b), 0.0)
        if abs(c_ab - c_ba) > 1e-10 * scale:
            raise DomainError("symmetric cubic pair did not collapse; bad expansion")
        tag = f"u{a + 1}^2*u{b + 1}+u{a + 1}*u{b + 1}^2"
        coeffs[tag] = c_ab / 2.0
    coeffs["u1*u2*u3"] = raw.get((1, 1, 1), 0.0) / 4.0
    known = {
        (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1),
        (2, 1, 0), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (0, 1, 2),
        (1, 1, 1),
    }
    stray = [k for k in raw if k not in known]
    if stray:
        raise DomainError(f"unexpected monomials in quadratic expansion: {stray}")
    ordered = {tag: coeffs[tag] for tag in _QUAD_TAGS}
    return AnsatzSystem(kind="quadratic", n=3, coefficients=ordered, raw=raw)


_EXP_TAGS = (
    ("exp(+u1+u2)", (1, 1, 0)),
    ("exp(-u1-u2)", (-1, -1, 0)),
    ("exp(+u1+u3)", (1, 0, 1)),
    ("exp(-u1-u3)", (-1, 0, -1)),
    ("exp(+u2+u3)", (0, 1, 1)),
    ("exp(-u2-u3)", (0, -1, -1)),
)


def extract_exponential_system(q, r) -> AnsatzSystem:
    """Coefficients for exponential X_i = q_i e^u + r_i e^-u (n = 3).

    The identity collapses to six exponentials e^(+/-(u_i + u_j)); each tag
    carries twice a difference of a q-product and an r-product.
    """
    q = np.asarray(q, dtype=float)
    r = np.asarray(r, dtype=float)
    if not (q.shape == r.shape == (4,)):
        raise DimensionMismatchError("exponential case needs 4 values of q and r")
    raw = _expand_exponential_identity(q, r)
    known = {vec for _, vec in _EXP_TAGS}
    stray = [k for k in raw if k not in known]
    if stray:
        raise DomainError(f"unexpected exponentials in expansion: {stray}")
    coeffs = {tag: raw.get(vec, 0.0) for tag, vec in _EXP_TAGS}
    return AnsatzSystem(kind="exponential", n=3, coefficients=coeffs, raw=raw)


# ---------------------------------------------------------------------------
# admissible domains and patches
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdmissibleDomain:
    """Positivity intervals of the X-profiles and the zero-sum feasibility flag."""

    intervals: tuple
    feasible: bool


def admissible_domain(xs, tol: float = 1e-12) -> AdmissibleDomain:
    """Intersect per-profile positivity with the zero-sum constraint.

    The free parameters are u_1..u_n; u_{n+1} = -(u_1 + ... + u_n) must land
    in the last profile's positivity interval, which is possible iff the open
    interval of achievable sums meets the reflected last interval.  Overlaps
    below tol (relative) count as empty: the degenerate cases collapse to an
    exactly empty open interval that float rounding may leave marginally open.
    """
    intervals = [x.positive_interval() for x in xs]
    if any(iv is None for iv in intervals):
        return AdmissibleDomain(intervals=tuple(intervals), feasible=False)
    free = intervals[:-1]
    lo_last, hi_last = intervals[-1]
    sum_lo = sum(iv[0] for iv in free)
    sum_hi = sum(iv[1] for iv in free)
    # need some s in (sum_lo, sum_hi) with -s in (lo_last, hi_last)
    lo = max(sum_lo, -hi_last)
    hi = min(sum_hi, -lo_last)
    if not lo < hi:
        feasible = False
    elif math.isinf(hi - lo):
        feasible = True
    else:
        feasible = (hi - lo) > tol * max(1.0, abs(lo), abs(hi))
    return AdmissibleDomain(intervals=tuple(intervals), feasible=feasible)


def composite_simpson(fn, a: float, b: float, panels: int = 256) -> float:
    """Composite Simpson rule with a fixed even panel count (4th order)."""
    if a == b:
        return 0.0
    if panels % 2:
        panels += 1
    t = np.linspace(a, b, panels + 1)
    w = np.ones(panels + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    vals = np.array([fn(v) for v in t])
    return float((b - a) / (3.0 * panels) * np.dot(w, vals))


def _x_antiderivative(xp: XProfile, u: float, m: int) -> float | None:
    """Canonical antiderivative of X^(-(2m-1)/(2m)) where a closed form exists."""
    g = (2 * m - 1) / (2 * m)
    if xp.kind == "affine":
        p0, q0 = xp.params
        if q0 == 0.0:
            return p0 ** (-g) * u
        return (2 * m / q0) * (p0 + q0 * u) ** (1.0 / (2 * m))
    if xp.kind == "exponential":
        q0, r0 = xp.params
        if r0 == 0.0 and q0 > 0:
            return -(1.0 / g) * q0 ** (-g) * math.exp(-g * u)
        if q0 == 0.0 and r0 > 0:
            return (1.0 / g) * r0 ** (-g) * math.exp(g * u)
    return None


def _x_coordinate(xp: XProfile, sign: float, u: float, u0: float, m: int,
                  panels: int = 256) -> float:
    g = (2 * m - 1) / (2 * m)
    anchor = _x_antiderivative(xp, u0, m)
    base = anchor if anchor is not None else 0.0
    integral = composite_simpson(lambda t: xp.value(t) ** (-g), u0, u, panels)
    return sign * (base + integral)


@dataclass
class SeparableMinimalPatch:
    """Quadrature-parametrised patch of a separable surface.

    us has shape grid + (n+1,) (the zero-sum parameters) and points has shape
    grid + (dim,) (the ambient coordinates).
    """

    xprofiles: tuple
    signs: tuple
    p: NormParams
    us: np.ndarray
    points: np.ndarray

    def flat_points(self) -> np.ndarray:
        return self.points.reshape(-1, self.points.shape[-1])

    def write_csv(self, path):
        n = self.us.shape[-1] - 1
        dim = self.points.shape[-1]
        header = [f"u{i + 1}" for i in range(n + 1)] + [f"x{i + 1}" for i in range(dim)]
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(",".join(header) + "\n")
            for uu, xx in zip(self.us.reshape(-1, n + 1), self.flat_points()):
                row = list(uu) + list(xx)
                fh.write(",".join(f"{v:.17g}" for v in row) + "\n")


def patch_from_xprofiles(xs, signs, axes, p: NormParams,
                         panels: int = 256) -> SeparableMinimalPatch:
    """Integrate the profile quadratures over a product grid of u-axes.

    axes is a sequence of n strictly-increasing 1-D arrays for u_1..u_n; the
    last parameter is the negative sum.  Every node must keep all X_i positive.
    """
    n = p.n
    if len(xs) != n + 1 or len(signs) != n + 1:
        raise DimensionMismatchError(f"need {n + 1} profiles and signs")
    axes = [np.asarray(a, dtype=float) for a in axes]
    if len(axes) != n or any(a.size == 0 for a in axes):
        raise EmptyDomainError("grid must provide a non-empty axis per parameter")
    dom = admissible_domain(xs)
    if not dom.feasible:
        raise EmptyDomainError("admissible domain is empty")
    for i, a in enumerate(axes):
        bad = [v for v in a if xs[i].value(v) <= 0.0]
        if bad:
            raise NonpositiveProfileError(
                f"X_{i + 1} not positive at axis values {bad[:3]}"
            )
    mesh = np.meshgrid(*axes, indexing="ij")
    u_last = -sum(mesh)
    if np.any([xs[n].value(v) <= 0.0 for v in u_last.ravel()]):
        raise NonpositiveProfileError("X_{n+1} not positive over the grid")
    shape = u_last.shape
    us = np.empty(shape + (n + 1,))
    for i in range(n):
        us[..., i] = mesh[i]
    us[..., n] = u_last

    points = np.empty(shape + (p.dim,))
    for i in range(n):
        u0 = float(axes[i][0])
        table = {
            float(v): _x_coordinate(xs[i], signs[i], float(v), u0, p.m, panels)
            for v in axes[i]
        }
        points[..., i] = np.vectorize(lambda v: table[float(v)])(mesh[i])
    u0_last = float(u_last.ravel()[0])
    flat_last = np.array(
        [
            _x_coordinate(xs[n], signs[n], float(v), u0_last, p.m, panels)
            for v in u_last.ravel()
        ]
    )
    points[..., n] = flat_last.reshape(shape)
    return SeparableMinimalPatch(
        xprofiles=tuple(xs), signs=tuple(signs), p=p, us=us, points=points
    )


def feasible_axes(xs, points_per_axis: int, span: float = 1.0,
                  margin: float = 0.05):
    """Per-axis sample ranges inside the admissible domain, shrunk until the
    zero-sum image stays admissible.  Raises EmptyDomainError when there is
    no room at all."""
    dom = admissible_domain(xs)
    if not dom.feasible:
        raise EmptyDomainError("admissible domain is empty")
    n = len(xs) - 1
    centers, halves = [], []
    for iv in dom.intervals[:-1]:
        lo = max(iv[0], -span)
        hi = min(iv[1], span)
        if not lo < hi:
            raise EmptyDomainError("axis interval empty inside the working span")
        centers.append(0.5 * (lo + hi))
        halves.append(0.5 * (hi - lo) * (1.0 - margin))
    lo_last, hi_last = dom.intervals[-1]
    # the dependent parameter stays padded away from its boundary too, since
    # the coordinate integrand can blow up (integrably) there
    width = min(hi_last - lo_last, 4.0 * span)
    pad = margin * width
    lo_pad, hi_pad = lo_last + pad, hi_last - pad
    center_last = -sum(centers)
    if not lo_pad < center_last < hi_pad:
        # slide the centers toward a feasible sum
        target = 0.5 * (max(lo_pad, -span) + min(hi_pad, span))
        shift = (-target - sum(centers)) / n
        centers = [c + shift for c in centers]
        center_last = -sum(centers)
        if not lo_pad < center_last < hi_pad:
            raise EmptyDomainError("could not center the grid in the domain")
    for _ in range(80):
        s_lo = sum(c - h for c, h in zip(centers, halves))
        s_hi = sum(c + h for c, h in zip(centers, halves))
        if lo_pad < -s_hi and -s_lo < hi_pad:
            break
        halves = [0.5 * h for h in halves]
    else:
        raise EmptyDomainError("no product grid fits the admissible domain")
    return [
        np.linspace(c - h, c + h, points_per_axis) for c, h in zip(centers, halves)
    ]


# ---------------------------------------------------------------------------
# example surfaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeparableSurface:
    """Profiles f_i with sum f_i(x_i) = 0, plus an on-surface point sampler."""

    name: str
    fs: tuple
    p: NormParams
    _sampler: object = field(repr=False)

    def sample(self, rng: np.random.Generator, count: int) -> np.ndarray:
        """count on-surface points with all coordinates bounded away from zero."""
        return self._sampler(rng, count)

    def residual(self, x) -> float:
        """The separable minimality residual at an ambient point."""
        d1 = np.array([f.d1(v) for f, v in zip(self.fs, x)])
        d2 = np.array([f.d2(v) for f, v in zip(self.fs, x)])
        return separable_residual_sum(d1, d2, self.p.m)


def _bisect_root(g, lo: float, hi: float, iters: int = 200) -> float | None:
    glo, ghi = g(lo), g(hi)
    if glo == 0.0:
        return lo
    if ghi == 0.0:
        return hi
    if glo * ghi > 0:
        return None
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if gm == 0.0:
            return mid
        if glo * gm < 0:
            hi, ghi = mid, gm
        else:
            lo, glo = mid, gm
        if hi - lo <= 1e-16 * (1.0 + abs(mid)):
            break
    return 0.5 * (lo + hi)


def _powersum_sampler(a, b, m: int, low: float = 0.3, high: float = 1.5,
                      floor: float = 0.1, ceil: float = 20.0):
    """Sampler for surfaces sum_i (a_i x_i^(2m) + b_i) = 0.

    Fixes all but the last coordinate at random signed magnitudes and solves
    the strictly monotone slice for the last one by bisection, rejecting
    slices without a root or with the solved coordinate too close to zero.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    dim = len(a)

    def sampler(rng: np.random.Generator, count: int) -> np.ndarray:
        out = np.empty((count, dim))
        got = 0
        attempts = 0
        while got < count:
            attempts += 1
            if attempts > 200 * count:
                raise DomainError("on-surface sampling kept rejecting slices")
            vals = rng.uniform(low, high, dim - 1) * rng.choice([-1.0, 1.0], dim - 1)
            rest = float(np.sum(a[:-1] * vals ** (2 * m)) + b.sum())

            def g(t, rest=rest):
                return a[-1] * t ** (2 * m) + rest

            root = _bisect_root(g, 0.0, ceil)
            if root is None or not floor <= root <= ceil:
                continue
            out[got, :-1] = vals
            out[got, -1] = root * rng.choice([-1.0, 1.0])
            got += 1
        return out

    return sampler


def _powersum_surface(name: str, a, b, m: int) -> SeparableSurface:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if abs(b.sum()) > 1e-12 * max(1.0, np.max(np.abs(b))):
        raise ConstraintViolationError("constant terms must sum to zero")
    fs = []
    for ai, bi in zip(a, b):
        pw = C3Function.power_even(ai, m)
        fs.append(
            C3Function(
                (lambda f, c: lambda x: f(x) + c)(pw.f, bi),
                d1=pw._d1, d2=pw._d2, d3=pw._d3,
            )
        )
    return SeparableSurface(
        name=name,
        fs=tuple(fs),
        p=NormParams(m=m, dim=len(a)),
        _sampler=_powersum_sampler(a, b, m),
    )


class _QuadratureProfile(C3Function):
    """f(x) = u(x) for x(u) = sign * integral of X^(-(2m-1)/(2m)) from 0.

    The inverse is computed by Newton iteration on the same quadrature, with
    derivatives taken analytically from X at the recovered parameter.
    """

    def __init__(self, xp: XProfile, sign: float, m: int, panels: int = 128):
        self.xp = xp
        self.sign = float(sign)
        self.m = m
        self.panels = panels
        self._gamma = (2 * m - 1) / (2 * m)
        self._memo: dict[float, float] = {}
        super().__init__(self._eval, d1=self._d1f, d2=self._d2f, d3=self._d3f)

    def x_of_u(self, u: float) -> float:
        return self.sign * composite_simpson(
            lambda t: self.xp.value(t) ** (-self._gamma), 0.0, u, self.panels
        )

    def u_of_x(self, x: float) -> float:
        """Safeguarded Newton inversion of the (monotone) coordinate quadrature."""
        key = float(x)
        if key in self._memo:
            return self._memo[key]
        lo, hi = -1.0, 1.0
        for _ in range(80):
            if (self.x_of_u(lo) - x) * (self.x_of_u(hi) - x) <= 0:
                break
            lo *= 2.0
            hi *= 2.0
        else:
            raise DomainError(f"x = {x} outside the reach of the quadrature chart")
        if self.x_of_u(lo) > self.x_of_u(hi):
            lo, hi = hi, lo  # orient so that x_of_u is increasing lo -> hi
        u = 0.5 * (lo + hi)
        for _ in range(80):
            res = self.x_of_u(u) - x
            if res > 0:
                hi = u
            else:
                lo = u
            step = res * self.sign * self.xp.value(u) ** self._gamma
            u_new = u - step
            if not (min(lo, hi) <= u_new <= max(lo, hi)):
                u_new = 0.5 * (lo + hi)
            if abs(u_new - u) <= 1e-15 * (1.0 + abs(u_new)):
                u = u_new
                break
            u = u_new
        if len(self._memo) > 4096:
            self._memo.clear()
        self._memo[key] = u
        return u

    def _eval(self, x):
        return self.u_of_x(x)

    def _d1f(self, x):
        u = self.u_of_x(x)
        return self.sign * self.xp.value(u) ** self._gamma

    def _d2f(self, x):
        u = self.u_of_x(x)
        X = self.xp.value(u)
        return self._gamma * self.xp.deriv(u) * X ** (2 * self._gamma - 1.0)

    def _d3f(self, x):
        # f'' = gamma X' X^(2 gamma - 1); differentiate in u, then times du/dx
        u = self.u_of_x(x)
        X = self.xp.value(u)
        Xp = self.xp.deriv(u)
        Xpp = self.xp.deriv2(u)
        g = self._gamma
        inner = Xpp * X ** (2 * g - 1.0) + (2 * g - 1.0) * Xp * Xp * X ** (2 * g - 2.0)
        return self.sign * g * inner * X ** g


def _exponential_sampler(fs, m: int, low: float = 0.3, high: float = 1.2,
                         floor: float = 0.25):
    """u-space sampler for the hyperbolic-profile surface: draw zero-sum u with
    every |u_i| bounded below, then map through the coordinate quadratures."""

    def sampler(rng: np.random.Generator, count: int) -> np.ndarray:
        out = np.empty((count, len(fs)))
        got = 0
        attempts = 0
        while got < count:
            attempts += 1
            if attempts > 500 * count:
                raise DomainError("u-space sampling kept rejecting draws")
            u = rng.uniform(low, high, len(fs) - 1) * rng.choice(
                [-1.0, 1.0], len(fs) - 1
            )
            u_last = -u.sum()
            if abs(u_last) < floor:
                continue
            uu = np.append(u, u_last)
            out[got] = [f.x_of_u(v) for f, v in zip(fs, uu)]
            got += 1
        return out

    return sampler


def _ratio_surface(m: int) -> SeparableSurface:
    # -log|x1| + log|x2| + log|x3| - log|x4| = 0, i.e. x2 x3 / (x1 x4) = +/-1
    beta = 2 * m / (2 * m - 1)
    gamma = (2 * m - 1) / (2 * m)
    signs = (-1.0, 1.0, 1.0, -1.0)
    fs = tuple(C3Function.log_abs(s * beta, gamma) for s in signs)

    def sampler(rng: np.random.Generator, count: int) -> np.ndarray:
        out = np.empty((count, 4))
        got = 0
        while got < count:
            vals = rng.uniform(0.3, 1.5, 3) * rng.choice([-1.0, 1.0], 3)
            rest = sum(f(v) for f, v in zip(fs[:3], vals))

            def g(t, rest=rest):
                return fs[3](t) + rest

            root = _bisect_root(g, 1e-8, 1e8)
            if root is None or not 0.05 <= root <= 20.0:
                continue
            out[got, :3] = vals
            out[got, 3] = root * rng.choice([-1.0, 1.0])
            got += 1
        return out

    return SeparableSurface(
        name="ratio", fs=fs, p=NormParams(m=m, dim=4), _sampler=sampler
    )


def example_xprofiles(example_id: str):
    """The X-profile data behind the affine and exponential catalogue entries."""
    if example_id == "6.1":
        p, q = (1, 1, 1, 1), (1, -1, -1, 1)
        return [XProfile.affine(pi, qi) for pi, qi in zip(p, q)], (1, 1, 1, 1)
    if example_id == "6.3":
        p, q = (1, 1, 3, 3, 1), (1, 1, -2, -2, 1)
        return [XProfile.affine(pi, qi) for pi, qi in zip(p, q)], (1, 1, 1, 1, 1)
    if example_id == "6.5":
        return [XProfile.exponential(1.0, 1.0) for _ in range(4)], (1, 1, 1, 1)
    if example_id == "6.6":
        qs, rs = (1, 0, 0, 1), (0, 1, 1, 0)
        return [XProfile.exponential(qi, ri) for qi, ri in zip(qs, rs)], (1, 1, 1, 1)
    raise DomainError(f"no X-profile data for example {example_id!r}")


def example_surface(example_id: str, m: int, r: int = 2,
                    pq: tuple | None = None) -> SeparableSurface:
    """Catalogue of separable minimal surfaces.

    6.1:   x1^2m - x2^2m - x3^2m + x4^2m = 0 in R^4.
    6.2:   sum_{i<=r} x_i^2m - sum_{i<=r} x_{r+i}^2m = 0 in R^2r (r >= 2).
    6.3:   x1^2m + x2^2m - 2^(2m-1)(x3^2m + x4^2m) + x5^2m = 0 in R^5.
    6.4:   -(r/(r-1))^(2m-1) sum_{i<=r} x_i^2m + sum x_{r+i}^2m = 0 in R^(2r+1).
    6.5:   hyperbolic-profile surface X_i = e^u + e^-u (quadrature chart) in R^4.
    6.6:   x2 x3 / (x1 x4) = +/-1 in R^4.
    i-2:   the affine-profile family reducing to 6.1; pq = (p1..p4, q1).
    iii-2: the affine-profile family reducing to 6.3; pq = (p1..p5, q1).
    """
    if m < 1:
        raise DomainError("m must be a positive integer")
    if example_id == "6.1":
        return _powersum_surface("6.1", [1, -1, -1, 1], [0, 0, 0, 0], m)
    if example_id == "6.2":
        if r < 2:
            raise DomainError("6.2 needs r >= 2")
        return _powersum_surface("6.2", [1] * r + [-1] * r, [0.0] * (2 * r), m)
    if example_id == "6.3":
        c = -(2.0 ** (2 * m - 1))
        return _powersum_surface("6.3", [1, 1, c, c, 1], [0.0] * 5, m)
    if example_id == "6.4":
        if r < 2:
            raise DomainError("6.4 needs r >= 2")
        lam = (r / (r - 1)) ** (2 * m - 1)
        return _powersum_surface(
            "6.4", [-lam] * r + [1.0] * (r + 1), [0.0] * (2 * r + 1), m
        )
    if example_id == "6.5":
        xs, signs = example_xprofiles("6.5")
        fs = tuple(_QuadratureProfile(x, s, m) for x, s in zip(xs, signs))
        return SeparableSurface(
            name="6.5", fs=fs, p=NormParams(m=m, dim=4),
            _sampler=_exponential_sampler(fs, m),
        )
    if example_id == "6.6":
        return _ratio_surface(m)
    if example_id == "i-2":
        p1, p2, p3, p4, q1 = pq if pq is not None else (1.0, 1.0, 1.0, 1.0, 1.0)
        if abs(-p1 + p2 + p3 - p4) > 1e-12:
            raise ConstraintViolationError("i-2 requires -p1 + p2 + p3 - p4 = 0")
        if q1 == 0.0:
            raise DomainError("q1 must be nonzero")
        c = (q1 / (2 * m)) ** (2 * m) / q1
        a = [c, -c, -c, c]
        b = [-p1 / q1, p2 / q1, p3 / q1, -p4 / q1]
        return _powersum_surface("i-2", a, b, m)
    if example_id == "iii-2":
        p1, p2, p3, p4, p5, q1 = (
            pq if pq is not None else (1.0, 1.0, 3.0, 3.0, 1.0, 1.0)
        )
        if abs(-2 * p1 - 2 * p2 + p3 + p4 - 2 * p5) > 1e-12:
            raise ConstraintViolationError(
                "iii-2 requires -2p1 - 2p2 + p3 + p4 - 2p5 = 0"
            )
        if q1 == 0.0:
            raise DomainError("q1 must be nonzero")
        c = (q1 / (2 * m)) ** (2 * m) / q1
        d = -((q1 / m) ** (2 * m)) / (2 * q1)
        a = [c, c, d, d, c]
        b = [-p1 / q1, -p2 / q1, p3 / (2 * q1), p4 / (2 * q1), -p5 / q1]
        return _powersum_surface("iii-2", a, b, m)
    raise DomainError(f"unknown example id {example_id!r}")


def perturbed_example_surface(example_id: str, m: int, r: int = 2,
                              factor: float = 1.1) -> SeparableSurface:
    """Power-sum example with its leading coefficient block scaled by factor.

    Breaking the coefficient balance destroys minimality, which is the sanity
    check that the on-surface H tests have teeth.
    """
    if example_id == "6.2":
        a = [factor] * r + [-1.0] * r
        b = [0.0] * (2 * r)
    elif example_id == "6.4":
        lam = factor * (r / (r - 1)) ** (2 * m - 1)
        a = [-lam] * r + [1.0] * (r + 1)
        b = [0.0] * (2 * r + 1)
    elif example_id == "6.1":
        a = [factor, -1.0, -1.0, 1.0]
        b = [0.0] * 4
    elif example_id == "6.3":
        c = -(2.0 ** (2 * m - 1))
        a = [factor, 1.0, c, c, 1.0]
        b = [0.0] * 5
    else:
        raise DomainError(f"no perturbation rule for example {example_id!r}")
    return _powersum_surface(f"{example_id}-perturbed", a, b, m)


# ---------------------------------------------------------------------------
# quadratic-case falsification
# ---------------------------------------------------------------------------


def quadratic_system_equations(p, q, r) -> np.ndarray:
    """The fourteen canonical coefficients as a residual vector."""
    sys = extract_quadratic_system(p, q, r)
    return np.array(list(sys.coefficients.values()))


def sweep_quadratic_system(rng: np.random.Generator, restarts: int = 40,
                           iters: int = 80) -> list:
    """Randomized Gauss-Newton sweep for solutions of the quadratic system.

    Returns the converged candidates (p, q, r, residual-norm).  Admissible
    quadratic-case data would need some r_i away from zero; the sweep is the
    numerical face of the claim that no such solution exists.
    """
    out = []
    for _ in range(restarts):
        theta = rng.uniform(-2.0, 2.0, 12)
        for _ in range(iters):
            p0, q0, r0 = theta[:4], theta[4:8], theta[8:]
            f = quadratic_system_equations(p0, q0, r0)
            if np.linalg.norm(f) < 1e-13:
                break
            jac = np.empty((14, 12))
            h = 1e-7
            for j in range(12):
                tp = theta.copy()
                tp[j] += h
                fp = quadratic_system_equations(tp[:4], tp[4:8], tp[8:])
                jac[:, j] = (fp - f) / h
            step, *_ = np.linalg.lstsq(jac, -f, rcond=None)
            lam = 1.0
            base = np.linalg.norm(f)
            for _ in range(20):
                trial = theta + lam * step
                ft = quadratic_system_equations(trial[:4], trial[4:8], trial[8:])
                if np.linalg.norm(ft) < base:
                    theta = trial
                    break
                lam *= 0.5
            else:
                break
        p0, q0, r0 = theta[:4], theta[4:8], theta[8:]
        res = float(np.linalg.norm(quadratic_system_equations(p0, q0, r0)))
        if res < 1e-10:
            out.append((p0.copy(), q0.copy(), r0.copy(), res))
    return out


def quadratic_case_verdict(p, q, r, tol: float = 1e-8):
    """Replay the two-branch elimination on a candidate solution.

    Returns (admissible, reason).  A candidate is admissible for the quadratic
    case only if some r_i is away from zero and q_j is nonzero wherever r_j
    vanishes; for exact solutions the elimination forces all r_i to zero and
    then kills the required q_j, so admissible candidates cannot occur.
    """
    p = np.asarray(p, float)
    q = np.asarray(q, float)
    r = np.asarray(r, float)
    if np.max(np.abs(r)) <= tol:
        return False, "all r_i vanish: degenerates to the affine case"
    if abs(r[3]) <= tol:
        i = int(np.argmax(np.abs(r[:3])))
        others = [j for j in range(3) if j != i]
        if any(abs(r[j]) > tol for j in others):
            return False, "cubic block violated: r_i r_j must vanish when r_4 = 0"
        # forced: q of every zero-r slot must vanish, contradicting admissibility
        if all(abs(q[j]) <= tol for j in others + [3]):
            return False, "forced q_j = 0 at slots with r_j = 0: inadmissible"
        return False, "candidate violates the quadratic block with r_4 = 0"
    s = r[0] + r[1] + r[2]
    if abs(s) > tol:
        return False, "r_4 (r_1 + r_2 + r_3) = 0 violated"
    prods = (
        abs(r[0] * r[1] - r[2] * r[3]),
        abs(r[0] * r[2] - r[1] * r[3]),
        abs(r[1] * r[2] - r[0] * r[3]),
    )
    if max(prods) > tol:
        return False, "cubic block violated with r_4 != 0"
    if max(abs(r[0]), abs(r[1]), abs(r[2])) > tol:
        m1, m2, m3 = abs(r[0]), abs(r[1]), abs(r[2])
        if abs(m1 - m2) > tol or abs(m2 - m3) > tol:
            return False, "|r_1| = |r_2| = |r_3| violated"
        return False, "equal moduli with zero sum force r_1 = r_2 = r_3 = 0"
    # r_1 = r_2 = r_3 = 0 with r_4 != 0 forces q_1 = q_2 = q_3 = 0
    return False, "forced q_1 = q_2 = q_3 = 0: inadmissible"
