#!/usr/bin/env python3
"""Render a planar slice and a sphere view of every variant into one folder.

    python scripts/gallery.py --out gallery --size 256
"""

from __future__ import annotations

import argparse
from pathlib import Path

from polynoise.images import RenderJob, render, render_sphere
from polynoise.noise import VARIANTS


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("gallery"))
    ap.add_argument("--size", type=int, default=256)
    ap.add_argument("--octaves", type=int, default=1)
    ap.add_argument("--threads", type=int, default=4)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for v in VARIANTS:
        common = dict(variant=v, width=args.size, height=args.size, octaves=args.octaves,
                      threads=args.threads, period=(8,) * int(v[-1]) if v.startswith("periodic") else None)
        render(RenderJob(scale=8.0 / args.size, out=args.out / f"{v}.pgm", **common))
        if int(v[-1]) >= 3:
            render_sphere(RenderJob(radius=4.0, out=args.out / f"{v}_sphere.pgm", **common))
        print(f"wrote {v}")


if __name__ == "__main__":
    main()
