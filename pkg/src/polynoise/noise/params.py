"""Per-variant constants: skew factors, kernel radius, output scales."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from decimal import Decimal, getcontext
from fractions import Fraction

import numpy as np

from ..f32core import F32, f32_from_fraction, f32lit


@dataclass(frozen=True)
class SkewConstants:
    dim: int
    F: np.float32
    G: np.float32


def skew_constants(dim: int) -> SkewConstants:
    """Skew ``F = (sqrt(N+1)-1)/N`` and unskew ``G = (1-1/sqrt(N+1))/N``.

    Both are evaluated to 50 digits and rounded once to binary32.
    """
    if dim not in (2, 3, 4):
        raise ValueError(f"unsupported dimension {dim}")
    getcontext().prec = 50
    root = Decimal(dim + 1).sqrt()
    F = (root - 1) / dim
    G = (1 - 1 / root) / dim
    return SkewConstants(
        dim,
        f32_from_fraction(Fraction(F)),
        f32_from_fraction(Fraction(G)),
    )


#: Two-dimensional constants exactly as written in the reference listing.
SKEW2_LITERALS = ("0.366025403784438597", "0.211324865405187134")

SKEW = {
    2: SkewConstants(2, f32lit(SKEW2_LITERALS[0]), f32lit(SKEW2_LITERALS[1])),
    3: skew_constants(3),
    4: skew_constants(4),
}


@dataclass(frozen=True)
class NoiseParams:
    """Evaluation knobs for one noise variant.

    ``kernel_radius`` only matters for simplex noise (squared-distance cutoff
    of the ``max(R - r2, 0)**4`` falloff).  ``output_scale`` maps the raw sum
    to roughly [-1, 1].
    """

    output_scale: np.float32
    kernel_radius: np.float32 = F32(0.5)
    normalize_gradients: bool = True

    def __post_init__(self):
        if not self.output_scale > 0:
            raise ValueError("output_scale must be positive")
        object.__setattr__(self, "output_scale", F32(self.output_scale))
        object.__setattr__(self, "kernel_radius", F32(self.kernel_radius))

    def with_(self, **changes) -> "NoiseParams":
        return replace(self, **changes)


# Output scales other than simplex2 come from scripts/calibrate_scales.py:
# scale = 1 / (largest |raw value| found by random search + hill climbing).
# Periodic noise is classic noise with wrapped corners and shares its scale.
OUTPUT_SCALE_LITERALS = {
    "simplex2": "130.0",
    "simplex3": "108.0432",
    "simplex4": "108.7347",
    "classic2": "2.3754513",
    "classic3": "1.493254",
    "classic4": "1.4368505",
}


def _default_params(variant: str) -> NoiseParams:
    family, dim = variant[:-1], variant[-1]
    key = f"classic{dim}" if family == "periodic" else variant
    return NoiseParams(output_scale=f32lit(OUTPUT_SCALE_LITERALS[key]))


@dataclass(frozen=True)
class Period:
    """Integer lattice period per axis, each in ``[1, 288]``."""

    axes: tuple[int, ...] = field(default=())

    def __post_init__(self):
        axes = tuple(self.axes)
        for a in axes:
            if int(a) != a or not 1 <= a <= 288:
                raise ValueError(f"period axis {a!r} outside [1, 288]")
        object.__setattr__(self, "axes", tuple(int(a) for a in axes))

    def as_f32(self) -> tuple[np.float32, ...]:
        return tuple(F32(a) for a in self.axes)


VARIANTS = (
    "simplex2", "simplex3", "simplex4",
    "classic2", "classic3", "classic4",
    "periodic2", "periodic3", "periodic4",
)

DEFAULT_PARAMS = {v: _default_params(v) for v in VARIANTS}
