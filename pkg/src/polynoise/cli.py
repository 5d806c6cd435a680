"""``polynoise`` command line interface.

    polynoise render      --noise simplex2 --size 512x512 --scale 0.03 --out s2.pgm
    polynoise sphere      --noise classic3 --size 256x256 --radius 4 --out c3.pgm
    polynoise bench       --noise simplex3 --duration 2 --threads 4
    polynoise stats       --noise simplex2 --samples 1000000
    polynoise export-glsl simplex2 --out snoise.glsl

Exit codes: 0 success, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .emitter import emit_shader_source, list_shader_kinds
from .images import RenderJob, render, render_sphere
from .noise import VARIANTS
from .sampling import bench, stats

EXIT_USAGE = 2
EXIT_IO = 3


class UsageError(Exception):
    pass


def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _size(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        return int(w), int(h)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WxH, got {text!r}")


def _noise_arg(p, default="simplex2"):
    p.add_argument("--noise", default=default, metavar="VARIANT",
                   help=f"one of: {', '.join(VARIANTS)} (default {default})")
    p.add_argument("--period", type=_ints, default=None,
                   help="integer period per axis for periodic variants, e.g. 8,8")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polynoise", description="Table-free gradient noise toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, help_ in (("render", "render a planar slice to an image"),
                        ("sphere", "render an orthographic noise-textured sphere")):
        p = sub.add_parser(name, help=help_)
        _noise_arg(p, "simplex2" if name == "render" else "simplex3")
        p.add_argument("--size", type=_size, default=(256, 256), metavar="WxH")
        p.add_argument("--scale", type=float, default=1.0 / 32, help="world units per pixel")
        p.add_argument("--origin", type=_floats, default=(), metavar="x,y[,z[,w]]")
        p.add_argument("--slice", type=_floats, default=(), metavar="z[,w]")
        p.add_argument("--radius", type=float, default=4.0, help="sphere radius in noise units")
        p.add_argument("--octaves", type=int, default=1)
        p.add_argument("--lacunarity", type=float, default=2.0)
        p.add_argument("--gain", type=float, default=0.5)
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--format", choices=("pgm", "png"), default="pgm")
        p.add_argument("--out", type=Path, default=None, help="output path (default <variant>.<format>)")

    p = sub.add_parser("bench", help="measure throughput in Msamples/s")
    _noise_arg(p)
    p.add_argument("--duration", type=float, default=2.0, metavar="S")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("stats", help="sample statistics as JSON")
    _noise_arg(p)
    p.add_argument("--samples", type=int, default=10**6)
    p.add_argument("--domain", type=_floats, default=(-64.0, 64.0), metavar="LO,HI")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("export-glsl", help="write GLSL 1.20 source for a variant")
    p.add_argument("kind", nargs="?", default=None, help="shader kind (same names as --noise)")
    p.add_argument("--noise", default=None, metavar="VARIANT")
    p.add_argument("--bare", action="store_true", help="omit the #version line")
    p.add_argument("--out", type=Path, default=None, help="output file (default stdout)")
    return ap


def _check_noise(name):
    if name not in VARIANTS:
        raise UsageError(f"unknown noise variant {name!r}; expected one of {', '.join(VARIANTS)}")


def _render(args, sphere: bool) -> int:
    _check_noise(args.noise)
    w, h = args.size
    try:
        job = RenderJob(
            variant=args.noise, width=w, height=h, origin=args.origin, scale=args.scale,
            slice=args.slice, octaves=args.octaves, lacunarity=args.lacunarity, gain=args.gain,
            period=args.period, radius=args.radius, threads=args.threads,
            out=args.out or Path(f"{args.noise}.{args.format}"), format=args.format,
        )
        if args.octaves < 1:
            raise ValueError("octaves must be >= 1")
    except ValueError as exc:
        raise UsageError(str(exc))
    (render_sphere if sphere else render)(job)
    return 0


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def run(args) -> int:
    if args.command in ("render", "sphere"):
        return _render(args, args.command == "sphere")
    if args.command == "bench":
        _check_noise(args.noise)
        _emit_json(bench(args.noise, args.duration, args.threads, args.seed, args.period).to_dict())
        return 0
    if args.command == "stats":
        _check_noise(args.noise)
        if len(args.domain) != 2:
            raise UsageError("--domain takes LO,HI")
        lo, hi = args.domain
        _emit_json(stats(args.noise, args.samples, lo, hi, args.seed, args.period, args.threads).to_dict())
        return 0
    if args.command == "export-glsl":
        kind = args.kind or args.noise or "simplex2"
        if kind not in list_shader_kinds():
            raise UsageError(f"unknown shader kind {kind!r}; expected one of {', '.join(list_shader_kinds())}")
        data = emit_shader_source(kind, standalone=not args.bare).encode("utf-8")
        if args.out is None:
            sys.stdout.flush()
            sys.stdout.buffer.write(data)
            sys.stdout.buffer.flush()
        else:
            args.out.write_bytes(data)
        return 0
    raise UsageError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except (UsageError, ValueError) as exc:
        print(f"polynoise {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"polynoise {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
