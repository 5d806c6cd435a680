"""Noise field rendering and 8-bit grayscale image encoding."""

from __future__ import annotations

import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .noise import dimension, fbm


@dataclass
class RenderJob:
    variant: str = "simplex2"
    width: int = 256
    height: int = 256
    origin: tuple[float, ...] = ()
    scale: float = 1.0 / 32
    slice: tuple[float, ...] = ()
    octaves: int = 1
    lacunarity: float = 2.0
    gain: float = 0.5
    period: tuple[int, ...] | None = None
    radius: float = 4.0
    threads: int = 1
    out: Path | None = None
    format: str = "pgm"

    def __post_init__(self):
        dim = dimension(self.variant)
        if self.width < 1 or self.height < 1:
            raise ValueError("width and height must be >= 1")
        if not self.scale > 0:
            raise ValueError("scale must be positive")
        if len(self.origin) > dim:
            raise ValueError(f"origin has more than {dim} components")
        if len(self.slice) > max(dim - 2, 0):
            raise ValueError(f"{self.variant} takes at most {max(dim - 2, 0)} slice coordinates")
        if not all(np.isfinite(self.origin)) or not all(np.isfinite(self.slice)):
            raise ValueError("origin and slice must be finite")
        if self.format not in ("pgm", "png"):
            raise ValueError(f"unknown image format {self.format!r}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")

    @property
    def dim(self) -> int:
        return dimension(self.variant)

    def origin_vec(self) -> np.ndarray:
        o = np.zeros(self.dim)
        o[: len(self.origin)] = self.origin
        return o

    def slice_vec(self) -> np.ndarray:
        s = np.zeros(self.dim - 2)
        s[: len(self.slice)] = self.slice
        return s


def to_pixels(values) -> np.ndarray:
    """``clamp(floor((v + 1)/2 * 255 + 0.5), 0, 255)`` as uint8 (v=0 -> 128)."""
    v = np.asarray(values, dtype=np.float64)
    return np.clip(np.floor((v + 1.0) / 2.0 * 255.0 + 0.5), 0, 255).astype(np.uint8)


def _sample(job: RenderJob, pts):
    return fbm(pts, job.variant, job.octaves, job.lacunarity, job.gain, period=job.period)


def _row_chunks(height, threads):
    n = min(height, max(threads, 1) * 4)
    bounds = np.linspace(0, height, n + 1).astype(int)
    return [(a, b) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


def _run_rows(job: RenderJob, rows_fn) -> np.ndarray:
    chunks = _row_chunks(job.height, job.threads)
    with ThreadPoolExecutor(max_workers=job.threads) as pool:
        parts = list(pool.map(lambda ab: rows_fn(*ab), chunks))
    return np.concatenate(parts, axis=0)


def planar_points(job: RenderJob, r0: int = 0, r1: int | None = None) -> np.ndarray:
    """World-space sample points for rows ``r0:r1``, shape ``(rows, width, N)``."""
    r1 = job.height if r1 is None else r1
    cols = np.arange(job.width, dtype=np.float64)
    rows = np.arange(r0, r1, dtype=np.float64)
    o = job.origin_vec()
    pts = np.empty((r1 - r0, job.width, job.dim), dtype=np.float64)
    pts[..., 0] = o[0] + cols[None, :] * job.scale
    pts[..., 1] = o[1] + rows[:, None] * job.scale
    for k, s in enumerate(job.slice_vec(), start=2):
        pts[..., k] = o[k] + s
    return pts.astype(np.float32)


def render_field(job: RenderJob) -> np.ndarray:
    """Noise values for every pixel, shape ``(height, width)``."""
    return _run_rows(job, lambda a, b: _sample(job, planar_points(job, a, b)))


def sphere_field(job: RenderJob) -> tuple[np.ndarray, np.ndarray]:
    """Orthographic view of a noise-textured sphere.

    Returns ``(values, inside)``; pixels outside the unit disc are masked.
    """
    if job.dim < 3:
        raise ValueError("sphere rendering needs a 3D or 4D variant")

    def rows(a, b):
        c = np.arange(job.width, dtype=np.float64)
        r = np.arange(a, b, dtype=np.float64)
        x = (2.0 * (c[None, :] + 0.5) / job.width - 1.0) * np.ones((b - a, 1))
        y = (1.0 - 2.0 * (r[:, None] + 0.5) / job.height) * np.ones((1, job.width))
        rr = x * x + y * y
        inside = rr <= 1.0
        z = np.sqrt(np.clip(1.0 - rr, 0.0, None))
        o = job.origin_vec()
        pts = np.empty((b - a, job.width, job.dim))
        pts[..., 0] = o[0] + job.radius * x
        pts[..., 1] = o[1] + job.radius * y
        pts[..., 2] = o[2] + job.radius * z
        if job.dim == 4:
            # the sphere supplies z; a single slice value (if any) is w
            pts[..., 3] = o[3] + (job.slice[-1] if job.slice else 0.0)
        vals = _sample(job, pts.astype(np.float32))
        return np.stack([np.where(inside, vals, 0.0), inside], axis=-1)

    out = _run_rows(job, rows)
    return out[..., 0].astype(np.float32), out[..., 1].astype(bool)


def sphere_pixels(job: RenderJob) -> np.ndarray:
    values, inside = sphere_field(job)
    return np.where(inside, to_pixels(values), 0).astype(np.uint8)


def encode_pgm(pixels: np.ndarray) -> bytes:
    h, w = pixels.shape
    return f"P5\n{w} {h}\n255\n".encode("ascii") + np.ascontiguousarray(pixels, np.uint8).tobytes()


def encode_png(pixels: np.ndarray) -> bytes:
    try:
        from PIL import Image
    except ImportError as exc:  # optional dependency
        raise ValueError("PNG output needs Pillow (pip install 'artifact[png]')") from exc
    buf = io.BytesIO()
    Image.fromarray(np.ascontiguousarray(pixels, np.uint8), mode="L").save(buf, format="PNG")
    return buf.getvalue()


def encode(pixels: np.ndarray, fmt: str = "pgm") -> bytes:
    return encode_pgm(pixels) if fmt == "pgm" else encode_png(pixels)


def render(job: RenderJob) -> bytes:
    """Render a planar slice; writes ``job.out`` if set and returns the bytes."""
    data = encode(to_pixels(render_field(job)), job.format)
    if job.out is not None:
        Path(job.out).write_bytes(data)
    return data


def render_sphere(job: RenderJob) -> bytes:
    data = encode(sphere_pixels(job), job.format)
    if job.out is not None:
        Path(job.out).write_bytes(data)
    return data
