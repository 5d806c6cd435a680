"""Classic (hypercubic lattice) Perlin noise and its periodic variant.

Corners are hashed with the permutation polynomial, gradients come from the
same cross-polytope maps as simplex noise, and the ``2**N`` corner
contributions are blended with the quintic fade, x innermost.
"""

from __future__ import annotations

from itertools import product

from ..f32core import F32, ONE, components, dot, floor32, fract32, mix32, mod32
from ..gradient import GRADIENTS, taylor_inv_sqrt
from ..hashing import mod289, permute
from .params import DEFAULT_PARAMS, NoiseParams, Period

_SIX = F32(6.0)
_FIFTEEN = F32(15.0)
_TEN = F32(10.0)


def fade(t):
    """Quintic ``t**3 * (t*(6t - 15) + 10)``: C2 at the lattice."""
    return t * t * t * (t * (t * _SIX - _FIFTEEN) + _TEN)


def _corner_hashes(lo, hi):
    """Hash all ``2**N`` corners, sharing the inner permutations.

    Returns a dict keyed by corner bit tuples ``(bx, by, ...)``.  Each value
    equals ``hash_corner(c_x, c_y, ...)``; evaluating the nested polynomial
    as a tree only avoids recomputing shared inner levels.
    """
    n = len(lo)
    level = {(): None}
    for axis in reversed(range(n)):
        nxt = {}
        for bits, h in level.items():
            for b, c in ((0, lo[axis]), (1, hi[axis])):
                nxt[(b,) + bits] = permute(c if h is None else h + c)
        level = nxt
    return level


def classic_raw(coords, params: NoiseParams, period: Period | None = None):
    n = len(coords)
    grad = GRADIENTS[n]

    i0 = tuple(floor32(c) for c in coords)
    f0 = tuple(fract32(c) for c in coords)
    f1 = tuple(f - ONE for f in f0)
    i1 = tuple(i + ONE for i in i0)
    if period is not None:
        per = period.as_f32()
        i0 = tuple(mod32(i, t) for i, t in zip(i0, per))
        i1 = tuple(mod32(i, t) for i, t in zip(i1, per))
    i0 = tuple(mod289(i) for i in i0)
    i1 = tuple(mod289(i) for i in i1)

    hashes = _corner_hashes(i0, i1)
    # values[k] is the corner whose bits, read x-first, spell k in binary
    # little-endian: index = bx + 2*by + 4*bz + ...
    values = []
    for bits in product((0, 1), repeat=n):
        bits = bits[::-1]
        g = grad(hashes[bits])
        d = tuple(f1[a] if b else f0[a] for a, b in enumerate(bits))
        v = dot(g, d)
        if params.normalize_gradients:
            v = v * taylor_inv_sqrt(dot(g, g))
        values.append(v)

    for axis in range(n):
        t = fade(f0[axis])
        values = [mix32(values[k], values[k + 1], t) for k in range(0, len(values), 2)]
    return params.output_scale * values[0]


def _classic(p, n, variant, params, period=None):
    return classic_raw(components(p, n), params or DEFAULT_PARAMS[variant], period)


def cnoise2(p, params: NoiseParams | None = None):
    """2-D classic noise at points of shape ``(..., 2)``."""
    return _classic(p, 2, "classic2", params)


def cnoise3(p, params: NoiseParams | None = None):
    return _classic(p, 3, "classic3", params)


def cnoise4(p, params: NoiseParams | None = None):
    return _classic(p, 4, "classic4", params)


def _as_period(period, n) -> Period:
    if not isinstance(period, Period):
        if isinstance(period, (int,)):
            period = (period,) * n
        period = Period(tuple(period))
    if len(period.axes) != n:
        raise ValueError(f"period needs {n} axes, got {len(period.axes)}")
    return period


def pnoise2(p, period, params: NoiseParams | None = None):
    """2-D classic noise, exactly periodic with integer ``period`` per axis."""
    return _classic(p, 2, "periodic2", params, _as_period(period, 2))


def pnoise3(p, period, params: NoiseParams | None = None):
    return _classic(p, 3, "periodic3", params, _as_period(period, 3))


def pnoise4(p, period, params: NoiseParams | None = None):
    return _classic(p, 4, "periodic4", params, _as_period(period, 4))
