"""Reproducible statistics and throughput measurement.

Sample points come from numpy's PCG64 generator, one independent stream per
batch keyed by ``(seed, batch_index)``.  Batches may be evaluated on any
number of worker threads; results are always merged in batch order, so
every reported number depends only on the flags.
"""

from __future__ import annotations

import hashlib
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .noise import dimension, evaluate

BATCH = 1 << 18
HIST_BINS = 64
HIST_RANGE = (-1.1, 1.1)
WARMUP_FRACTION = 0.1
CHECK_BATCHES = 4


def batch_points(variant: str, seed: int, index: int, size: int = BATCH,
                 lo: float = -64.0, hi: float = 64.0) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))
    return rng.uniform(lo, hi, (size, dimension(variant))).astype(np.float32)


def histogram(values) -> np.ndarray:
    """64 uniform bins over [-1.1, 1.1]; out-of-range values land in the end bins."""
    lo, hi = HIST_RANGE
    idx = np.floor((np.asarray(values, np.float64) - lo) / (hi - lo) * HIST_BINS)
    idx = np.clip(idx, 0, HIST_BINS - 1).astype(np.int64)
    return np.bincount(idx, minlength=HIST_BINS)


@dataclass
class StatsReport:
    variant: str
    samples: int
    mean: float
    stddev: float
    min: float
    max: float
    histogram: list[int]
    seconds: float
    msamples_per_sec: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class _Moments:
    n: int = 0
    mean: float = 0.0
    m2: float = 0.0
    lo: float = np.inf
    hi: float = -np.inf

    def merge(self, v: np.ndarray) -> None:
        # Chan et al. pairwise update; applied in batch order only
        v = v.astype(np.float64)
        n_b = v.size
        mean_b = float(v.mean())
        m2_b = float(((v - mean_b) ** 2).sum())
        n = self.n + n_b
        delta = mean_b - self.mean
        self.mean += delta * n_b / n
        self.m2 += m2_b + delta * delta * self.n * n_b / n
        self.n = n
        self.lo = min(self.lo, float(v.min()))
        self.hi = max(self.hi, float(v.max()))


def _evaluate_batches(variant, seed, indices, sizes, lo, hi, period, threads):
    def work(args):
        i, size = args
        return evaluate(variant, batch_points(variant, seed, i, size, lo, hi), period=period)

    with ThreadPoolExecutor(max_workers=max(threads, 1)) as pool:
        yield from pool.map(work, zip(indices, sizes))


def stats(variant: str, samples: int, lo: float = -64.0, hi: float = 64.0, seed: int = 0,
          period=None, threads: int = 1) -> StatsReport:
    """Moments, extrema and histogram over ``samples`` uniform points in ``[lo, hi)^N``."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not hi > lo:
        raise ValueError("domain upper bound must exceed lower bound")
    nb = -(-samples // BATCH)
    sizes = [BATCH] * (nb - 1) + [samples - BATCH * (nb - 1)]
    mom = _Moments()
    hist = np.zeros(HIST_BINS, dtype=np.int64)
    t0 = time.perf_counter()
    for v in _evaluate_batches(variant, seed, range(nb), sizes, lo, hi, period, threads):
        mom.merge(v)
        hist += histogram(v)
    dt = time.perf_counter() - t0
    return StatsReport(
        variant=variant,
        samples=samples,
        mean=mom.mean,
        stddev=float(np.sqrt(mom.m2 / mom.n)),
        min=mom.lo,
        max=mom.hi,
        histogram=hist.tolist(),
        seconds=dt,
        msamples_per_sec=samples / dt / 1e6,
    )


@dataclass
class BenchReport:
    variant: str
    threads: int
    samples: int
    seconds: float
    msamples_per_sec: float
    checksum: str

    def to_dict(self) -> dict:
        return asdict(self)


def checksum(variant: str, seed: int = 0, threads: int = 1, period=None,
             batches: int = CHECK_BATCHES, size: int = BATCH) -> str:
    """SHA-256 over the float32 bytes of the first ``batches`` stream batches."""
    h = hashlib.sha256()
    for v in _evaluate_batches(variant, seed, range(batches), [size] * batches,
                               -64.0, 64.0, period, threads):
        h.update(np.ascontiguousarray(v, np.float32).tobytes())
    return h.hexdigest()


def bench(variant: str, duration: float = 2.0, threads: int = 1, seed: int = 0,
          period=None, batch: int = 1 << 16) -> BenchReport:
    """Throughput in Msamples/s over ``duration`` seconds of wall-clock time.

    The first 10% of the time is warm-up and is not counted.  Point
    generation happens before timing; only noise evaluation is measured.
    The checksum covers a fixed prefix of the stream so it is comparable
    across runs and thread counts regardless of how many samples fit into
    the time budget.
    """
    if not duration > 0:
        raise ValueError("duration must be positive")
    threads = max(threads, 1)
    pts = [batch_points(variant, seed, i, batch) for i in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        def round_():
            list(pool.map(lambda p: evaluate(variant, p, period=period), pts))

        warm_end = time.perf_counter() + WARMUP_FRACTION * duration
        round_()
        while time.perf_counter() < warm_end:
            round_()
        count = 0
        t0 = time.perf_counter()
        end = t0 + (1.0 - WARMUP_FRACTION) * duration
        while True:
            round_()
            count += batch * threads
            now = time.perf_counter()
            if now >= end:
                break
    elapsed = now - t0
    return BenchReport(
        variant=variant,
        threads=threads,
        samples=count,
        seconds=elapsed,
        msamples_per_sec=count / elapsed / 1e6,
        checksum=checksum(variant, seed, threads, period),
    )
