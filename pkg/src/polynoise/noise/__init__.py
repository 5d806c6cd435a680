"""Simplex, classic and periodic gradient noise plus an fBm helper."""

from __future__ import annotations

from ..f32core import F32, ONE, f32
from .classic import cnoise2, cnoise3, cnoise4, fade, pnoise2, pnoise3, pnoise4
from .params import (
    DEFAULT_PARAMS,
    SKEW,
    VARIANTS,
    NoiseParams,
    Period,
    SkewConstants,
    skew_constants,
)
from .simplex import kernel, rank3, rank4, rank_order, snoise2, snoise3, snoise4

_FUNCS = {
    "simplex2": snoise2, "simplex3": snoise3, "simplex4": snoise4,
    "classic2": cnoise2, "classic3": cnoise3, "classic4": cnoise4,
    "periodic2": pnoise2, "periodic3": pnoise3, "periodic4": pnoise4,
}

DEFAULT_PERIOD = 32


def dimension(variant: str) -> int:
    check_variant(variant)
    return int(variant[-1])


def check_variant(variant: str) -> None:
    if variant not in _FUNCS:
        raise ValueError(f"unknown noise variant {variant!r}; expected one of {', '.join(VARIANTS)}")


def evaluate(variant: str, p, period=None, params: NoiseParams | None = None):
    """Evaluate ``variant`` at points of shape ``(..., N)``.

    Periodic variants take ``period`` (int or per-axis sequence), defaulting
    to ``DEFAULT_PERIOD`` on every axis; other variants ignore it.
    """
    check_variant(variant)
    fn = _FUNCS[variant]
    if variant.startswith("periodic"):
        return fn(p, DEFAULT_PERIOD if period is None else period, params)
    return fn(p, params)


def fbm(p, variant: str = "simplex2", octaves: int = 4, lacunarity=2.0, gain=0.5,
        period=None, params: NoiseParams | None = None):
    """Fractal sum ``sum(gain**k * n(lacunarity**k * p)) / sum(gain**k)``."""
    if octaves < 1:
        raise ValueError("octaves must be >= 1")
    lacunarity, gain = F32(lacunarity), F32(gain)
    if not (lacunarity > 0 and gain > 0):
        raise ValueError("lacunarity and gain must be positive")
    p = f32(p)
    amp, freq = ONE, ONE
    acc = norm = None
    for _ in range(octaves):
        term = amp * evaluate(variant, p * freq, period, params)
        acc = term if acc is None else acc + term
        norm = amp if norm is None else norm + amp
        amp = amp * gain
        freq = freq * lacunarity
    return acc / norm


__all__ = [
    "DEFAULT_PARAMS", "DEFAULT_PERIOD", "SKEW", "VARIANTS", "NoiseParams", "Period",
    "SkewConstants", "check_variant", "cnoise2", "cnoise3", "cnoise4", "dimension",
    "evaluate", "fade", "fbm", "kernel", "pnoise2", "pnoise3", "pnoise4", "rank3",
    "rank4", "rank_order", "skew_constants", "snoise2", "snoise3", "snoise4",
]
