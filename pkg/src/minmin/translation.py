"""Translation hypersurfaces: minimality residual, profile ODE family, cylinders.

A translation graph is x_{n+1} = f_1(u_1) + ... + f_n(u_n).  Separating the
minimality equation of such a graph yields a one-parameter ODE family for the
profile slope y = f':

    y' = (c0 / 2m) * ( |y|^((2m-2)/(2m-1)) + k * y^2 ),      k = n - 1.

For n = 2 the two profiles carry opposite-sign constants (+c0 / -c0) and the
assembled surface is minimal identically; for n >= 3 the same-sign candidate
fails to be minimal (generic grids witness a residual bounded away from zero),
and the only way out is a cylinder over a two-profile surface, after a
homothetical rescaling of the base profiles.
"""

from dataclasses import dataclass, field

import numpy as np

from .curvature import GraphChart, translation_residual_sum
from .errors import (
    DimensionMismatchError,
    DomainError,
    IntegrationError,
)
from .functions import C3Function
from .norms import NormParams, signed_pow

SLOPE_CAP = 1e6          # |f'| beyond this counts as blow-up
STEP_RESIDUAL_CAP = 1e-6  # step-doubling disagreement that stops integration
SLOPE_FLOOR = 1e-12       # |f'| below this counts as "y reached 0"


@dataclass(frozen=True)
class TranslationSurface:
    """n single-variable profiles plus the norm parameters (n = dim - 1)."""

    profiles: tuple
    p: NormParams

    def __post_init__(self):
        if len(self.profiles) != self.p.n:
            raise DimensionMismatchError(
                f"need {self.p.n} profiles for dim {self.p.dim}, got {len(self.profiles)}"
            )

    @property
    def n(self) -> int:
        return self.p.n

    def value(self, u) -> float:
        return float(sum(f(t) for f, t in zip(self.profiles, u)))

    def grad(self, u) -> np.ndarray:
        return np.array([f.d1(t) for f, t in zip(self.profiles, u)])

    def chart(self) -> GraphChart:
        return GraphChart(self.value, self.grad, self.p)

    def domain_axes(self, points_per_axis: int, margin: float = 1e-3,
                    fallback: float = 1.0):
        """Per-profile sample axes inside the covered domains.

        Profiles with unbounded domains get [-fallback, fallback].
        """
        axes = []
        for f in self.profiles:
            lo, hi = getattr(f, "domain", (-np.inf, np.inf))
            if not np.isfinite(lo) or not np.isfinite(hi):
                lo, hi = -fallback, fallback
            pad = margin * (hi - lo)
            axes.append(np.linspace(lo + pad, hi - pad, points_per_axis))
        return axes


def minimality_residual(ts: TranslationSurface, u) -> float:
    """Minimality residual at a parameter point: zero exactly where H = 0.

    Equals -n(2m-1) A^((2m+1)/(2m)) H, so it carries no negative powers of the
    slopes at m = 1 and is the quantity to test near small slopes.
    """
    u = np.asarray(u, dtype=float)
    if u.shape != (ts.n,):
        raise DimensionMismatchError(f"expected {ts.n} parameters")
    d1 = np.array([f.d1(t) for f, t in zip(ts.profiles, u)])
    d2 = np.array([f.d2(t) for f, t in zip(ts.profiles, u)])
    return translation_residual_sum(d1, d2, ts.p.m)


def residual_grid(ts: TranslationSurface, axes) -> np.ndarray:
    """Minimality residual over the product grid of per-parameter sample axes."""
    mesh = np.meshgrid(*axes, indexing="ij")
    out = np.empty(mesh[0].shape)
    for idx in np.ndindex(out.shape):
        out[idx] = minimality_residual(ts, [g[idx] for g in mesh])
    return out


# ---------------------------------------------------------------------------
# profile ODE
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProfileODEParams:
    """Separated profile ODE y' = (c0/2m)(|y|^((2m-2)/(2m-1)) + k y^2).

    k is the coefficient of the quadratic term (k = n - 1 in the separation);
    y0 is the initial slope f'(u0) and must be nonzero.
    """

    c0: float
    k: int
    m: int
    y0: float
    u0: float = 0.0
    step: float = 1e-3
    max_steps: int = 5000

    def __post_init__(self):
        if self.step <= 0:
            raise DomainError("step must be positive")
        if self.y0 == 0.0:
            raise DomainError("initial slope y0 must be nonzero")
        if self.k < 1 or self.m < 1:
            raise DomainError("k and m must be positive integers")

    def rhs(self, y: float) -> float:
        m = self.m
        return (self.c0 / (2 * m)) * (signed_pow(y, 2 * m - 2, 2 * m - 1) + self.k * y * y)

    def rhs_deriv(self, y: float) -> float:
        m = self.m
        d = (2 * m - 2) / (2 * m - 1) * signed_pow(y, 2 * m - 2 - (2 * m - 1), 2 * m - 1)
        return (self.c0 / (2 * m)) * (d + 2 * self.k * y)


@dataclass
class ProfileCurve:
    """Sampled solution of the profile ODE on the covered interval.

    Samples are (u, f, f', f'') with f'' evaluated through the generating ODE;
    ode_residual_max is a 5-point finite-difference audit of f' against the
    right-hand side, relative to 1 + |rhs|.
    """

    u: np.ndarray
    f: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    params: ProfileODEParams
    domain: tuple = field(init=False)
    ode_residual_max: float = field(init=False)

    def __post_init__(self):
        self.domain = (float(self.u[0]), float(self.u[-1]))
        self.ode_residual_max = self._audit()

    def _audit(self) -> float:
        y = self.d1
        h = self.params.step
        if len(y) < 5:
            return 0.0
        d = (-y[4:] + 8 * y[3:-1] - 8 * y[1:-3] + y[:-4]) / (12 * h)
        rhs = np.array([self.params.rhs(v) for v in y[2:-2]])
        return float(np.max(np.abs(d - rhs) / (1.0 + np.abs(rhs))))

    def to_c3(self) -> "SampledProfile":
        return SampledProfile(self)

    def write_csv(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("u,f,f_prime,f_double_prime\n")
            for row in zip(self.u, self.f, self.d1, self.d2):
                fh.write(",".join(f"{v:.17g}" for v in row) + "\n")


def _rk4_step(rhs, state, h):
    k1 = rhs(state)
    k2 = rhs(state + 0.5 * h * k1)
    k3 = rhs(state + 0.5 * h * k2)
    k4 = rhs(state + h * k3)
    return state + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)


def integrate_profile(params: ProfileODEParams) -> ProfileCurve:
    """Integrate the profile ODE both ways from u0 with fixed-step classical RK4.

    The state is (f, y = f'); f(u0) = 0.  Each direction halts when y reaches
    zero or changes sign, |y| exceeds the blow-up cap, the step-doubling check
    disagrees beyond the cap, or max_steps is exhausted.
    """

    def rhs(state):
        return np.array([state[1], params.rhs(state[1])])

    sign0 = np.sign(params.y0)

    def run(direction):
        h = direction * params.step
        state = np.array([0.0, params.y0])
        out = []
        for _ in range(params.max_steps):
            full = _rk4_step(rhs, state, h)
            half = _rk4_step(rhs, _rk4_step(rhs, state, h / 2), h / 2)
            if not np.all(np.isfinite(full)):
                break
            if abs(full[1] - half[1]) > STEP_RESIDUAL_CAP * (1.0 + abs(full[1])):
                break
            y = full[1]
            if abs(y) > SLOPE_CAP or abs(y) < SLOPE_FLOOR or np.sign(y) != sign0:
                break
            state = full
            out.append(state)
        return out

    with np.errstate(over="ignore", invalid="ignore"):
        fwd = run(+1.0)
        bwd = run(-1.0)
    if not fwd and not bwd:
        raise IntegrationError(
            "no admissible step: immediate blow-up or step too large"
        )
    h = params.step
    us, fs_, ys = [], [], []
    for i, st in enumerate(reversed(bwd)):
        us.append(params.u0 - (len(bwd) - i) * h)
        fs_.append(st[0])
        ys.append(st[1])
    us.append(params.u0)
    fs_.append(0.0)
    ys.append(params.y0)
    for i, st in enumerate(fwd):
        us.append(params.u0 + (i + 1) * h)
        fs_.append(st[0])
        ys.append(st[1])
    u = np.array(us)
    y = np.array(ys)
    d2 = np.array([params.rhs(v) for v in y])
    return ProfileCurve(u=u, f=np.array(fs_), d1=y, d2=d2, params=params)


class SampledProfile(C3Function):
    """C3 view of a ProfileCurve: cubic Hermite between nodes, ODE for f'' and f'''."""

    def __init__(self, curve: ProfileCurve):
        self.curve = curve
        super().__init__(
            self._eval, d1=self._d1_eval, d2=self._d2_eval, d3=self._d3_eval,
            domain=curve.domain,
        )

    def _locate(self, x):
        c = self.curve
        if x < c.u[0] - 1e-12 or x > c.u[-1] + 1e-12:
            raise DomainError(
                f"u = {x} outside covered profile domain [{c.u[0]}, {c.u[-1]}]"
            )
        h = c.params.step
        i = int(np.clip(np.floor((x - c.u[0]) / h), 0, len(c.u) - 2))
        t = (x - c.u[i]) / h
        return i, t, h

    @staticmethod
    def _hermite(t, v0, v1, s0, s1, h):
        # cubic Hermite basis on [0, 1] with slopes scaled by the step
        h00 = (1 + 2 * t) * (1 - t) ** 2
        h10 = t * (1 - t) ** 2
        h01 = t * t * (3 - 2 * t)
        h11 = t * t * (t - 1)
        return h00 * v0 + h10 * h * s0 + h01 * v1 + h11 * h * s1

    def _eval(self, x):
        i, t, h = self._locate(x)
        c = self.curve
        return self._hermite(t, c.f[i], c.f[i + 1], c.d1[i], c.d1[i + 1], h)

    def _d1_eval(self, x):
        i, t, h = self._locate(x)
        c = self.curve
        return self._hermite(t, c.d1[i], c.d1[i + 1], c.d2[i], c.d2[i + 1], h)

    def _d2_eval(self, x):
        return self.curve.params.rhs(self._d1_eval(x))

    def _d3_eval(self, x):
        y = self._d1_eval(x)
        return self.curve.params.rhs_deriv(y) * self.curve.params.rhs(y)


# ---------------------------------------------------------------------------
# assembly and cylinders
# ---------------------------------------------------------------------------


def assemble_separated_surface(
    m: int,
    n: int,
    c0: float,
    inits,
    step: float = 1e-3,
    max_steps: int = 5000,
) -> TranslationSurface:
    """Build the separated-profile candidate surface with k = n - 1.

    inits is a sequence of n (y0, u0) pairs.  For n = 2 the profiles carry
    +c0 and -c0, which makes the assembled residual vanish identically; for
    n >= 3 all profiles carry +c0, the candidate that minimality rules out.
    """
    if n < 2:
        raise DomainError("need n >= 2 profiles")
    if len(inits) != n:
        raise DimensionMismatchError(f"need {n} (y0, u0) pairs, got {len(inits)}")
    k = n - 1
    signs = [1.0, -1.0] if n == 2 else [1.0] * n
    profiles = []
    for sign, (y0, u0) in zip(signs, inits):
        params = ProfileODEParams(
            c0=sign * c0, k=k, m=m, y0=y0, u0=u0, step=step, max_steps=max_steps
        )
        profiles.append(integrate_profile(params).to_c3())
    return TranslationSurface(profiles=tuple(profiles), p=NormParams(m=m, dim=n + 1))


def cylinder_over(
    ts2: TranslationSurface, total_n: int, slopes=None, intercepts=None
) -> TranslationSurface:
    """Extend a minimal two-profile surface to n = total_n by linear profiles.

    Appending linear profiles f_j = a_j u_j + b_j (a_j != 0) changes the
    constant term of the residual through T = sum_j a_j^(2m/(2m-1)); rescaling
    the base profiles by lambda = (1 + T)^((2m-1)/(2m)) restores minimality
    identically, which is the homothetical change the construction needs.
    """
    if ts2.n != 2:
        raise DimensionMismatchError("base surface must have two profiles")
    if total_n < 3:
        raise DomainError("total_n must be at least 3")
    m = ts2.p.m
    extra = total_n - 2
    if slopes is None:
        slopes = [0.5] * extra
    if intercepts is None:
        intercepts = [0.0] * extra
    if len(slopes) != extra or len(intercepts) != extra:
        raise DimensionMismatchError(f"need {extra} slopes and intercepts")
    if any(a == 0.0 for a in slopes):
        raise DomainError("linear profile slopes must be nonzero (chart hypothesis)")
    T = sum(signed_pow(a, 2 * m, 2 * m - 1) for a in slopes)
    lam = (1.0 + T) ** ((2 * m - 1) / (2 * m))
    profiles = [f.scaled(lam) for f in ts2.profiles]
    profiles += [C3Function.linear(a, b) for a, b in zip(slopes, intercepts)]
    return TranslationSurface(
        profiles=tuple(profiles), p=NormParams(m=m, dim=total_n + 1)
    )
