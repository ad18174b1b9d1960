import numpy as np

import minmin as mm


def classical_graph_mean_curvature(grad, hess_diag):
    """Euclidean graph mean curvature tr(E^-1 L)/n with upward normal.

    E = I + g g^T, L = Hess / sqrt(1 + |g|^2); the independent m = 1 oracle.
    """
    g = np.asarray(grad, dtype=float)
    n = g.size
    E = np.eye(n) + np.outer(g, g)
    L = np.diag(np.asarray(hess_diag, dtype=float)) / np.sqrt(1.0 + g @ g)
    return float(np.trace(np.linalg.solve(E, L))) / n


def fd_weingarten(chart, t0, p, h=1e-5):
    """Rows of the Weingarten matrix by central differences of the normal."""
    t0 = np.asarray(t0, dtype=float)
    n = p.n
    basis = np.column_stack([chart.tangents(t0), chart.nu(t0) / np.linalg.norm(chart.nu(t0))])
    W = np.empty((n, n))
    defect = 0.0
    for j in range(n):
        tp = t0.copy()
        tp[j] += h
        tm = t0.copy()
        tm[j] -= h
        coef = np.linalg.solve(basis, (chart.eta(tp) - chart.eta(tm)) / (2 * h))
        W[j, :] = coef[:n]
        defect = max(defect, abs(coef[n]))
    return W, defect


def translation_chart(fs, p):
    return mm.GraphChart(
        value_fn=lambda t: sum(f(ti) for f, ti in zip(fs, t)),
        grad_fn=lambda t: np.array([f.d1(ti) for f, ti in zip(fs, t)]),
        p=p,
    )
