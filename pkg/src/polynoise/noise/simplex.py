"""Simplex noise in 2, 3 and 4 dimensions.

Corner selection uses rank ordering: each in-cell coordinate is ranked
against the others with pairwise ``step`` comparisons, and the corner
offsets are the indicator vectors of "rank >= k".  No branches, no tables.
"""

from __future__ import annotations

from itertools import combinations

from ..f32core import (
    F32,
    ONE,
    ZERO,
    clamp32,
    components,
    dot,
    floor32,
    max32,
    step32,
)
from ..gradient import GRADIENTS, taylor_inv_sqrt
from ..hashing import hash_corner, mod289
from .params import DEFAULT_PARAMS, SKEW, NoiseParams


def rank_order(x):
    """Corner offsets ``(i1, ..., i_{N-1})`` for in-cell position ``x``.

    ``rank[a]`` counts the components that axis ``a`` beats; a tie goes to
    the lower axis index (``step`` returns 1.0 on equality).  ``i_k`` marks
    the axes with rank ``>= N-k``, so ``i1`` holds the single largest axis,
    ``i2`` the two largest, and so on.
    """
    n = len(x)
    rank = [ZERO] * n
    for a, b in combinations(range(n), 2):
        a_wins = step32(x[b], x[a])
        rank[a] = rank[a] + a_wins
        rank[b] = rank[b] + (ONE - a_wins)
    return tuple(
        tuple(clamp32(r - F32(n - 1 - k), ZERO, ONE) for r in rank)
        for k in range(1, n)
    )


def rank3(x):
    return rank_order(tuple(x))


def rank4(x):
    return rank_order(tuple(x))


def kernel(r2, radius):
    """Radial falloff ``max(radius - r2, 0)**4``."""
    m = max32(radius - r2, ZERO)
    m = m * m
    return m * m


def simplex_raw(coords, params: NoiseParams):
    """Sum of corner contributions, scaled by ``params.output_scale``."""
    n = len(coords)
    F, G = SKEW[n].F, SKEW[n].G
    grad = GRADIENTS[n]

    s = dot(coords, (F,) * n)
    i = tuple(floor32(c + s) for c in coords)
    t = dot(i, (G,) * n)
    x0 = tuple((c - ic) + t for c, ic in zip(coords, i))

    offsets = rank_order(x0)
    corners = [x0]
    for k, off in enumerate(offsets, start=1):
        kG = G * F32(k)
        corners.append(tuple((x + kG) - o for x, o in zip(x0, off)))
    last = G * F32(n) - ONE
    corners.append(tuple(x + last for x in x0))

    i = tuple(mod289(ic) for ic in i)
    steps = [(ZERO,) * n, *offsets, (ONE,) * n]

    acc = None
    for d, off in zip(corners, steps):
        h = hash_corner(*(ic + o for ic, o in zip(i, off)))
        g = grad(h)
        m = kernel(dot(d, d), params.kernel_radius)
        if params.normalize_gradients:
            m = m * taylor_inv_sqrt(dot(g, g))
        term = m * dot(g, d)
        acc = term if acc is None else acc + term
    return params.output_scale * acc


def _simplex(p, n, variant, params):
    return simplex_raw(components(p, n), params or DEFAULT_PARAMS[variant])


def snoise2(p, params: NoiseParams | None = None):
    """2-D simplex noise at points of shape ``(..., 2)``."""
    return _simplex(p, 2, "simplex2", params)


def snoise3(p, params: NoiseParams | None = None):
    return _simplex(p, 3, "simplex3", params)


def snoise4(p, params: NoiseParams | None = None):
    return _simplex(p, 4, "simplex4", params)
