"""Command-line front end.

Exit codes: 0 success, 2 usage/validation error, 1 runtime failure.
All commands validate their inputs before writing any output file.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import imgio, metrics
from .attacks import AttackSpec
from .bench import load_bench_config, run_bench
from .keyfile import load_key
from .scramble import apply_permutation, invert_permutation, scramble_permutation
from .watermark import embed, extract


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="camark",
        description="Keyed CA image scrambling and blind bit-plane watermarking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scramble", help="permute an image with the key's CA permutation")
    _io_key(p)
    p.set_defaults(func=cmd_scramble)

    p = sub.add_parser("unscramble", help="apply the inverse permutation")
    _io_key(p)
    p.set_defaults(func=cmd_unscramble)

    p = sub.add_parser("embed", help="hide a watermark image in a cover image")
    _io_key(p)
    p.add_argument("--wm", required=True, help="watermark image (thresholded at 128)")
    p.add_argument("--mode", choices=("substitute", "or"), help="override the key's mode")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="blindly recover the watermark from an image")
    _io_key(p)
    p.add_argument("--mode", choices=("substitute", "or"), help="override the key's mode")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("attack", help="degrade an image (noise, crop, jpeg)")
    p.add_argument("--kind", required=True, choices=("noise", "crop", "jpeg"))
    p.add_argument("--param", required=True, type=float,
                   help="noise density / crop fraction / jpeg quality")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("metrics", help="print one metric as a JSON object")
    p.add_argument("--kind", required=True, choices=("gdd", "psnr", "ber", "nc", "histogram"))
    p.add_argument("--in", dest="inputs", action="append", required=True,
                   help="input image; give twice (first is the reference)")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("bench", help="run a method x attack grid from a config file")
    p.add_argument("--config", required=True)
    p.set_defaults(func=cmd_bench)

    return parser


def _io_key(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--out", required=True)


def cmd_scramble(args) -> int:
    img = imgio.read_image(args.in_path)
    key = load_key(args.key)
    perm = scramble_permutation(img.size, key.scramble)
    imgio.write_image(args.out, apply_permutation(img, perm))
    return 0


def cmd_unscramble(args) -> int:
    img = imgio.read_image(args.in_path)
    key = load_key(args.key)
    perm = invert_permutation(scramble_permutation(img.size, key.scramble))
    imgio.write_image(args.out, apply_permutation(img, perm))
    return 0


def cmd_embed(args) -> int:
    cover = imgio.read_image(args.in_path)
    key = _key(args)
    bits = imgio.to_bits(imgio.read_image(args.wm))
    imgio.write_image(args.out, embed(cover, bits, key))
    return 0


def cmd_extract(args) -> int:
    img = imgio.read_image(args.in_path)
    key = _key(args)
    imgio.write_image(args.out, imgio.bits_to_image(extract(img, key)))
    return 0


def cmd_attack(args) -> int:
    img = imgio.read_image(args.in_path)
    spec = AttackSpec(kind=args.kind, param=args.param, seed=args.seed)
    imgio.write_image(args.out, spec.apply(img))
    return 0


def cmd_metrics(args) -> int:
    kind = args.kind
    if len(args.inputs) != 2:
        raise ValueError(f"metrics --kind {kind} needs --in given exactly twice")
    a = imgio.read_image(args.inputs[0])
    b = imgio.read_image(args.inputs[1])
    out: dict = {"kind": kind}
    if kind == "gdd":
        e_a = metrics.gray_difference_mean(a)
        e_b = metrics.gray_difference_mean(b)
        norm, raw = metrics.gdd(a, b)
        out.update(gdd_normalized=norm, gdd_raw=raw, e_gd_original=e_a, e_gd_test=e_b)
    elif kind == "psnr":
        value = metrics.psnr(a, b)
        out["psnr_db"] = value if value != float("inf") else "inf"
    elif kind == "ber":
        out["ber"] = metrics.ber(imgio.to_bits(a), imgio.to_bits(b))
    elif kind == "nc":
        out["nc"] = metrics.nc(imgio.to_bits(a), imgio.to_bits(b))
    else:
        equal = bool((metrics.histogram(a) == metrics.histogram(b)).all())
        out["histogram_equal"] = equal
    print(json.dumps(out, sort_keys=True))
    return 0


def cmd_bench(args) -> int:
    cfg = load_bench_config(args.config)
    failures = run_bench(cfg)
    print(f"bench: {cfg.output_dir / 'bench.csv'}")
    if failures:
        for f in failures:
            print(f"cell failed: {f['cell']}: {f['error']}", file=sys.stderr)
        return 1
    return 0


def _key(args):
    key = load_key(args.key)
    if getattr(args, "mode", None):
        key = dataclasses.replace(key, mode=args.mode)
    return key


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
