"""Table-free gradient noise in strict single precision."""

from .noise import (
    DEFAULT_PARAMS,
    VARIANTS,
    NoiseParams,
    Period,
    cnoise2,
    cnoise3,
    cnoise4,
    evaluate,
    fbm,
    pnoise2,
    pnoise3,
    pnoise4,
    snoise2,
    snoise3,
    snoise4,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PARAMS", "VARIANTS", "NoiseParams", "Period", "cnoise2", "cnoise3", "cnoise4",
    "evaluate", "fbm", "pnoise2", "pnoise3", "pnoise4", "snoise2", "snoise3", "snoise4",
]
