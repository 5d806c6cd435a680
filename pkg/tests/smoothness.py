"""Boundary-straddling gradient probe shared by the smoothness tests.

Points are placed exactly on a cell face (classic) or on a face of the
simplex decomposition, then axis-aligned central-difference gradients are
taken at two distances on each side along the face normal.  A linear
extrapolation ``1.5*g(s) - 0.5*g(3s)`` removes the first-order curvature
term, so the two one-sided limits can be compared directly.
"""

import numpy as np

from polynoise.noise import SKEW, evaluate

STEP = 1e-3
OFFSET = 2e-3
SMALL_PERIOD = 3  # small enough that wrap faces occur inside [-4, 4]


def boundary_points(variant, count, rng, extent=4.0):
    d = int(variant[-1])
    if not variant.startswith("simplex"):
        b = rng.uniform(-extent, extent, (count, d))
        axis = rng.integers(0, d, count)
        rows = np.arange(count)
        b[rows, axis] = np.round(b[rows, axis])
        nrm = np.zeros((count, d))
        nrm[rows, axis] = 1.0
        return b, nrm
    F, G = float(SKEW[d].F), float(SKEW[d].G)
    u = rng.uniform(-extent, extent, (count, d))
    nrm = np.zeros((count, d))
    for k in range(count):
        a, c = rng.choice(d, 2, replace=False)
        nv = np.zeros(d)
        if rng.integers(2) == 0:
            # cell face: skewed coordinate a is an integer
            u[k, a] = np.round(u[k, a])
            nv[a] = 1.0
            nv += F
        else:
            # interior face: equal fractional parts along a and c
            u[k, a] = np.floor(u[k, a]) + (u[k, c] - np.floor(u[k, c]))
            nv[a], nv[c] = 1.0, -1.0
        nrm[k] = nv / np.linalg.norm(nv)
    p = u - G * u.sum(axis=1, keepdims=True)
    return p, nrm


def _field(variant, params):
    period = SMALL_PERIOD if variant.startswith("periodic") else None

    def f(p):
        return evaluate(variant, p.astype(np.float32), period=period, params=params).astype(np.float64)
    return f


def _grad(f, p, h):
    d = p.shape[1]
    g = np.empty_like(p)
    for a in range(d):
        e = np.zeros(d)
        e[a] = h
        pp = (p + e).astype(np.float32).astype(np.float64)
        pm = (p - e).astype(np.float32).astype(np.float64)
        g[:, a] = (f(pp) - f(pm)) / (pp[:, a] - pm[:, a])
    return g


def boundary_gradient_gap(variant, count=10_000, seed=0, params=None):
    """Largest one-sided gradient mismatch across boundaries, Euclidean norm."""
    rng = np.random.default_rng(seed)
    b, n = boundary_points(variant, count, rng)
    f = _field(variant, params)
    s = OFFSET

    def side(sign):
        return 1.5 * _grad(f, b + sign * s * n, STEP) - 0.5 * _grad(f, b + sign * 3 * s * n, STEP)

    return float(np.linalg.norm(side(-1) - side(1), axis=1).max())


def lipschitz_ratio(variant, count=10_000, seed=0, h=1e-3):
    """Largest ``|n(p + d) - n(p)| / |d|`` for random p and ``|d| = h``."""
    rng = np.random.default_rng(seed)
    dim = int(variant[-1])
    p = rng.uniform(-64, 64, (count, dim)).astype(np.float32).astype(np.float64)
    d = rng.normal(size=p.shape)
    d *= h / np.linalg.norm(d, axis=1, keepdims=True)
    q = (p + d).astype(np.float32).astype(np.float64)
    actual = np.linalg.norm(q - p, axis=1)
    diff = np.abs(evaluate(variant, q.astype(np.float32)).astype(np.float64)
                  - evaluate(variant, p.astype(np.float32)))
    return float((diff / actual).max())
