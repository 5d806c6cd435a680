"""Strict IEEE-754 binary32 arithmetic helpers.

Every function here takes and returns ``numpy.float32`` values (scalars or
arrays).  numpy evaluates float32 elementwise arithmetic with one rounding
per operation and never contracts ``a*b + c`` into a fused multiply-add, so
composing these helpers reproduces unfused single-precision shader
semantics bit for bit.

Vectors are plain tuples of float32 arrays (one array per component); this
keeps every component operation explicit and the evaluation order fixed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

F32 = np.float32

ZERO = F32(0.0)
HALF = F32(0.5)
ONE = F32(1.0)
TWO = F32(2.0)


def f32(x) -> np.ndarray:
    """Convert array-like input to a float32 array (one rounding)."""
    return np.asarray(x, dtype=np.float32)


def f32_from_fraction(q: Fraction) -> np.float32:
    """Round an exact rational to the nearest binary32, ties to even."""
    guess = F32(float(q))
    best = guess
    best_err = abs(Fraction(float(guess)) - q)
    for cand in (np.nextafter(guess, F32(-np.inf)), np.nextafter(guess, F32(np.inf))):
        err = abs(Fraction(float(cand)) - q)
        if err < best_err or (
            err == best_err and int(np.asarray(cand).view(np.uint32)) % 2 == 0
        ):
            best, best_err = cand, err
    return F32(best)


def f32lit(text: str) -> np.float32:
    """Parse a decimal literal and round it once, directly, to binary32.

    ``np.float32(float(text))`` rounds twice (decimal to double to single)
    and can land one ulp away for adversarial literals; this does not.
    """
    return f32_from_fraction(Fraction(text.strip()))


def floor32(x):
    return np.floor(x)


_BELOW_ONE = np.nextafter(ONE, ZERO)


def fract32(x):
    """``x - floor(x)``, clamped below 1.0.

    For tiny negative ``x`` the subtraction rounds up to exactly 1.0; the
    clamp keeps the result in ``[0, 1)`` and is a no-op everywhere else.
    """
    return np.minimum(x - np.floor(x), _BELOW_ONE)


def mod32(x, y):
    """Floored modulo: ``x - y*floor(x/y)`` with the sign of ``y``.

    Evaluated as an exact remainder (``fmod``) plus a sign fix instead of
    the literal shader expression, whose rounded quotient and product drift
    for large ``|x|`` (e.g. ``mod(16777215, 289)``).  Both agree bit for
    bit whenever the shader expression is exact, which covers every
    integer operand the noise functions produce.
    """
    y = F32(y) if np.isscalar(y) else f32(y)
    if np.any(y == 0):
        raise ValueError("mod32: modulus must be nonzero")
    r = np.fmod(x, y)
    r = np.where((r != 0) & ((r < 0) != (y < 0)), r + y, r)
    # r + y can round onto y itself when r is a tiny opposite-signed remainder
    r = np.where(r == y, np.nextafter(y, ZERO), r)
    return r.astype(np.float32, copy=False)


def step32(edge, x):
    """0.0 where ``x < edge`` else 1.0 (equality gives 1.0)."""
    return np.where(x < edge, ZERO, ONE).astype(np.float32, copy=False)


def abs32(x):
    return np.abs(x)


def max32(a, b):
    return np.maximum(a, b)


def min32(a, b):
    return np.minimum(a, b)


def clamp32(x, lo, hi):
    return np.minimum(np.maximum(x, lo), hi)


def round_half_up32(x):
    """``floor(x + 0.5)``: the pre-1.30 shader substitute for ``round``."""
    return np.floor(x + HALF)


def sign32(x):
    return np.sign(x)


def mix32(a, b, t):
    """Linear blend ``a*(1-t) + b*t`` evaluated as written."""
    return a * (ONE - t) + b * t


def dot(a: Sequence, b: Sequence):
    """Dot product accumulated left to right in component order."""
    acc = a[0] * b[0]
    for ai, bi in zip(a[1:], b[1:]):
        acc = acc + ai * bi
    return acc


def components(p, n: int) -> tuple[np.ndarray, ...]:
    """Split an array of shape ``(..., n)`` into ``n`` float32 component arrays."""
    arr = f32(p)
    if arr.shape[-1:] != (n,):
        raise ValueError(f"expected points with trailing dimension {n}, got shape {arr.shape}")
    return tuple(arr[..., k].copy() for k in range(n))
