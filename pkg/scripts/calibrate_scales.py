#!/usr/bin/env python3
"""Calibrate output scales: scale = 1 / max |raw noise|.

Stage 1 draws uniform random points (default 1e8 per variant) and keeps the
top candidates; stage 2 hill-climbs around each candidate with a shrinking
random step.  ``--write`` patches the literals in ``noise/params.py``.

    python scripts/calibrate_scales.py --samples 100000000 --write
"""

from __future__ import annotations

import argparse
import heapq
import re
import time
from pathlib import Path

import numpy as np

from polynoise.f32core import F32
from polynoise.noise import DEFAULT_PARAMS, evaluate

CALIBRATED = ("simplex3", "simplex4", "classic2", "classic3", "classic4")
PARAMS_FILE = Path(__file__).resolve().parents[1] / "src" / "polynoise" / "noise" / "params.py"


def raw(variant, pts):
    params = DEFAULT_PARAMS[variant].with_(output_scale=F32(1.0))
    return evaluate(variant, pts, params=params)


def random_search(variant, samples, seed, top, batch=1 << 20, extent=289.0):
    dim = int(variant[-1])
    rng = np.random.default_rng(seed)
    best: list[tuple[float, tuple]] = []
    done = 0
    while done < samples:
        n = min(batch, samples - done)
        pts = rng.uniform(-extent, extent, (n, dim)).astype(np.float32)
        v = np.abs(raw(variant, pts))
        idx = np.argpartition(v, -top)[-top:]
        for k in idx:
            item = (float(v[k]), tuple(pts[k].tolist()))
            if len(best) < top:
                heapq.heappush(best, item)
            else:
                heapq.heappushpop(best, item)
        done += n
    return sorted(best, reverse=True)


def hill_climb(variant, seeds, seed, iters=400, fan=128, step0=0.05, step1=1e-6):
    dim = int(variant[-1])
    rng = np.random.default_rng(seed + 1)
    pts = np.array([p for _, p in seeds], dtype=np.float32)
    vals = np.abs(raw(variant, pts))
    for it in range(iters):
        step = step0 * (step1 / step0) ** (it / (iters - 1))
        cand = pts[:, None, :] + rng.normal(0.0, step, (len(pts), fan, dim)).astype(np.float32)
        cv = np.abs(raw(variant, cand.reshape(-1, dim))).reshape(len(pts), fan)
        j = cv.argmax(axis=1)
        better = cv[np.arange(len(pts)), j] > vals
        pts[better] = cand[better, j[better]]
        vals[better] = cv[better, j[better]]
    k = int(vals.argmax())
    return float(vals[k]), pts[k]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=10**8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--top", type=int, default=64)
    ap.add_argument("--variants", nargs="*", default=list(CALIBRATED))
    ap.add_argument("--write", action="store_true", help="patch params.py with the new scales")
    args = ap.parse_args(argv)

    scales = {}
    for variant in args.variants:
        t0 = time.perf_counter()
        seeds = random_search(variant, args.samples, args.seed, args.top)
        peak, where = hill_climb(variant, seeds, args.seed)
        scale = F32(1.0 / peak)
        literal = np.format_float_positional(scale, unique=True, trim="0")
        scales[variant] = literal
        print(f"{variant}: random max {seeds[0][0]:.7f}, climbed max {peak:.7f} at "
              f"{where.tolist()}, scale {literal} ({time.perf_counter() - t0:.0f} s)",
              flush=True)

    if args.write:
        text = PARAMS_FILE.read_text()
        for variant, literal in scales.items():
            text, n = re.subn(rf'("{variant}": )"[^"]*"', rf'\1"{literal}"', text)
            assert n == 1, variant
        PARAMS_FILE.write_text(text)
        print(f"updated {PARAMS_FILE}")


if __name__ == "__main__":
    main()
