"""Hash index to gradient mapping on cross-polytope boundaries.

A hash value is folded onto a small regular grid of points, and points that
fall outside the cross-polytope are reflected back onto the opposite facet.
The fold keeps the L1 norm of every gradient constant:

* 2-D: 41 points on a line -> diamond ``|gx| + |gy| = 0.5``
* 3-D: 7x7 grid           -> octahedron ``|gx| + |gy| + |gz| = 1``
* 4-D: 6x7x7 grid         -> truncated 4-cross-polytope, L1 norm 1.5

All arithmetic is binary32 and branch-free so the same expressions can be
emitted as shader code.
"""

from __future__ import annotations

import numpy as np

from .f32core import (
    F32,
    HALF,
    ONE,
    TWO,
    abs32,
    f32,
    f32lit,
    floor32,
    fract32,
    mod32,
    round_half_up32,
    sign32,
    step32,
)

INV41 = ONE / F32(41.0)
TAYLOR_A = f32lit("1.79284291400159")
TAYLOR_B = f32lit("0.85373472095314")

GRAD3_FOLD = 49
GRAD4_FOLD = 294

_SEVEN = F32(7.0)
_SIX = F32(6.0)
_FORTY_NINE = F32(49.0)
_ONE_HALF = F32(1.5)


def grad2(h):
    """Map hash values to 2-D gradients ``(gx, gy)`` with ``|gx|+|gy| = 0.5``."""
    h = f32(h)
    x = fract32(h * INV41) * TWO - ONE
    gy = abs32(x) - HALF
    gx = x - round_half_up32(x)
    return gx, gy


def _grid(a, n):
    """Cell centre ``(2a + 0.5)/n - 1`` of an n-point grid over [-1, 1]."""
    return (a * TWO + HALF) / n - ONE


def _fold(*coords_and_last):
    """Reflect points whose last coordinate went negative onto the far facet."""
    *coords, last = coords_and_last
    outside = ONE - step32(F32(0.0), last)
    return tuple(c - outside * sign32(c) for c in coords) + (last,)


def grad3(h):
    """Map hash values to octahedron gradients ``(gx, gy, gz)``, L1 norm 1."""
    k = mod32(f32(h), F32(GRAD3_FOLD))
    a = floor32(k / _SEVEN)
    b = k - a * _SEVEN
    u = _grid(a, _SEVEN)
    v = _grid(b, _SEVEN)
    z = (ONE - abs32(u)) - abs32(v)
    return _fold(u, v, z)


def grad4(h):
    """Map hash values to 4-D gradients ``(gx, gy, gz, gw)``, L1 norm 1.5.

    Indices are folded modulo 294; hash values only reach 288, so the last
    five grid points are defined but never selected by the noise functions.
    """
    k = mod32(f32(h), F32(GRAD4_FOLD))
    c = floor32(k / _FORTY_NINE)
    r = k - c * _FORTY_NINE
    a = floor32(r / _SEVEN)
    b = r - a * _SEVEN
    u = _grid(a, _SEVEN)
    v = _grid(b, _SEVEN)
    t = _grid(c, _SIX)
    w = ((_ONE_HALF - abs32(u)) - abs32(v)) - abs32(t)
    return _fold(u, v, t, w)


def taylor_inv_sqrt(r):
    """First-order Taylor approximation of ``1/sqrt(r)`` around ``r = 0.7``."""
    return TAYLOR_A - TAYLOR_B * r


GRADIENTS = {2: grad2, 3: grad3, 4: grad4}


def gradient_table(dim: int) -> np.ndarray:
    """All distinct gradients of a dimension, one row per fold index."""
    count = {2: 41, 3: GRAD3_FOLD, 4: GRAD4_FOLD}[dim]
    g = GRADIENTS[dim](np.arange(count, dtype=np.float32))
    return np.stack(g, axis=-1)
