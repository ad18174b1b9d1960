"""Scalar profile functions with derivatives up to order three.

Surfaces in this library are assembled from single-variable profiles; curvature
formulas need their first and second derivatives and the separation analysis
occasionally the third.  C3Function bundles a value callable with d1, d2, d3,
filling any missing derivative with 5-point central finite differences.
"""

from __future__ import annotations

import numpy as np

_EPS = np.finfo(float).eps


def _fd1(f, x, h):
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)


def _fd2(f, x, h):
    return (
        -f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)
    ) / (12 * h * h)


def _fd3(f, x, h):
    return (
        -f(x + 3 * h)
        + 8 * f(x + 2 * h)
        - 13 * f(x + h)
        + 13 * f(x - h)
        - 8 * f(x - 2 * h)
        + f(x - 3 * h)
    ) / (8 * h**3)


class C3Function:
    """A scalar function of one variable with derivatives of orders 1-3.

    Analytic derivatives are used where supplied; missing ones fall back to
    5-point central stencils on the highest available analytic order.
    """

    def __init__(self, f, d1=None, d2=None, d3=None, domain=None):
        self.f = f
        self._d1 = d1
        self._d2 = d2
        self._d3 = d3
        self.domain = (-np.inf, np.inf) if domain is None else tuple(domain)

    def __call__(self, x: float) -> float:
        return float(self.f(x))

    def d1(self, x: float) -> float:
        if self._d1 is not None:
            return float(self._d1(x))
        h = _EPS ** 0.2 * (1.0 + abs(x))
        return float(_fd1(self.f, x, h))

    def d2(self, x: float) -> float:
        if self._d2 is not None:
            return float(self._d2(x))
        if self._d1 is not None:
            h = _EPS ** 0.2 * (1.0 + abs(x))
            return float(_fd1(self._d1, x, h))
        h = _EPS ** (1.0 / 6.0) * (1.0 + abs(x))
        return float(_fd2(self.f, x, h))

    def d3(self, x: float) -> float:
        if self._d3 is not None:
            return float(self._d3(x))
        if self._d2 is not None:
            h = _EPS ** 0.2 * (1.0 + abs(x))
            return float(_fd1(self._d2, x, h))
        if self._d1 is not None:
            h = _EPS ** (1.0 / 6.0) * (1.0 + abs(x))
            return float(_fd2(self._d1, x, h))
        h = _EPS ** (1.0 / 7.0) * (1.0 + abs(x))
        return float(_fd3(self.f, x, h))

    def scaled(self, lam: float, mu: float = 1.0) -> "C3Function":
        """The rescaled profile x -> lam * f(mu * x)."""
        f = self.f
        lo, hi = self.domain
        dom = tuple(sorted((lo / mu, hi / mu))) if mu != 0 else (-np.inf, np.inf)
        return C3Function(
            lambda x: lam * f(mu * x),
            d1=lambda x: lam * mu * self.d1(mu * x),
            d2=lambda x: lam * mu * mu * self.d2(mu * x),
            d3=lambda x: lam * mu**3 * self.d3(mu * x),
            domain=dom,
        )

    def validate_derivatives(self, points, rel_tol: float = 1e-5) -> float:
        """Largest relative deviation of d1..d3 from finite differences of f.

        Returns the worst deviation over the sampled points; raises nothing.
        """
        worst = 0.0
        for x in points:
            for order, val, fd in (
                (1, self.d1(x), _fd1(self.f, x, _EPS ** 0.2 * (1 + abs(x)))),
                (2, self.d2(x), _fd2(self.f, x, _EPS ** (1 / 6.0) * (1 + abs(x)))),
                (3, self.d3(x), _fd3(self.f, x, _EPS ** (1 / 7.0) * (1 + abs(x)))),
            ):
                worst = max(worst, abs(val - fd) / (1.0 + abs(fd)))
        return worst

    # ---- constructors ----------------------------------------------------

    @classmethod
    def polynomial(cls, coeffs) -> "C3Function":
        """Polynomial sum_k coeffs[k] * x^k with analytic derivatives."""
        c = np.asarray(coeffs, dtype=float)
        c1 = np.polynomial.polynomial.polyder(c) if len(c) > 1 else np.array([0.0])
        c2 = np.polynomial.polynomial.polyder(c1) if len(c1) > 1 else np.array([0.0])
        c3 = np.polynomial.polynomial.polyder(c2) if len(c2) > 1 else np.array([0.0])
        pv = np.polynomial.polynomial.polyval
        return cls(
            lambda x: pv(x, c),
            d1=lambda x: pv(x, c1),
            d2=lambda x: pv(x, c2),
            d3=lambda x: pv(x, c3),
        )

    @classmethod
    def taylor(cls, x0: float, derivs) -> "C3Function":
        """Polynomial with prescribed value and derivatives at x0.

        derivs = (f(x0), f'(x0), f''(x0), ...); the result is the Taylor
        polynomial around x0, so its derivatives at x0 are exactly derivs.
        """
        d = np.asarray(derivs, dtype=float)
        fact = np.cumprod(np.concatenate(([1.0], np.arange(1.0, len(d)))))
        coeffs = d / fact
        pv = np.polynomial.polynomial.polyval
        der = np.polynomial.polynomial.polyder
        c = coeffs
        cs = [c]
        for _ in range(3):
            c = der(c) if len(c) > 1 else np.array([0.0])
            cs.append(c)
        return cls(
            lambda x: pv(x - x0, cs[0]),
            d1=lambda x: pv(x - x0, cs[1]),
            d2=lambda x: pv(x - x0, cs[2]),
            d3=lambda x: pv(x - x0, cs[3]),
        )

    @classmethod
    def linear(cls, a: float, b: float = 0.0) -> "C3Function":
        """a*x + b."""
        return cls.polynomial([b, a])

    @classmethod
    def power_even(cls, coeff: float, m: int) -> "C3Function":
        """coeff * x^(2m), the separable building block."""
        k = 2 * m
        return cls(
            lambda x: coeff * x**k,
            d1=lambda x: coeff * k * x ** (k - 1),
            d2=lambda x: coeff * k * (k - 1) * x ** (k - 2),
            d3=lambda x: coeff * k * (k - 1) * (k - 2) * x ** (k - 3)
            if k >= 3
            else 0.0,
        )

    @classmethod
    def neg_log_cos(cls, sign: float = 1.0) -> "C3Function":
        """sign * (-log cos x): slope sign*tan x, the classical saddle profile."""
        return cls(
            lambda x: -sign * np.log(np.cos(x)),
            d1=lambda x: sign * np.tan(x),
            d2=lambda x: sign / np.cos(x) ** 2,
            d3=lambda x: 2 * sign * np.tan(x) / np.cos(x) ** 2,
        )

    @classmethod
    def log_abs(cls, coeff: float, inner: float = 1.0) -> "C3Function":
        """coeff * log(inner * |x|), defined away from x = 0."""
        return cls(
            lambda x: coeff * np.log(inner * abs(x)),
            d1=lambda x: coeff / x,
            d2=lambda x: -coeff / x**2,
            d3=lambda x: 2 * coeff / x**3,
        )
