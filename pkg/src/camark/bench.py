"""Benchmark harness: methods x attack grid -> per-cell artifacts + reports.

For every (cover, method, attack, param, seed) cell the harness embeds,
attacks, and blindly extracts, then records BER/NC (watermark fidelity),
PSNR of the attacked image against the cover, and the scrambling-degree
numbers of the method's permutation. Cells run in a fixed grid order and
all report files are byte-deterministic for a given config.

A failing cell is recorded in the summary and the run continues; the
caller turns a non-empty failure list into a nonzero exit code.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import imgio, metrics
from .attacks import AttackSpec
from .baselines import fisher_yates_permutation
from .errors import DimensionError, KeyFormatError
from .keyfile import load_key
from .scramble import apply_permutation, scramble_permutation
from .watermark import WatermarkKey, embed_with_permutation, extract_with_permutation

METHODS = ("ca-rule-7", "fisher-yates", "direct-lsb")

CSV_COLUMNS = (
    "cover",
    "method",
    "attack",
    "param",
    "attack_seed",
    "ber",
    "nc",
    "psnr_db",
    "gdd_normalized",
    "e_gd_original",
    "e_gd_scrambled",
)

_CONFIG_FIELDS = {"covers", "watermark", "key", "attacks", "attack_seeds", "methods", "output_dir"}
_REQUIRED_FIELDS = {"covers", "watermark", "key", "attacks", "output_dir"}


@dataclass(frozen=True)
class BenchAttack:
    kind: str
    params: tuple
    seeds: tuple


@dataclass(frozen=True)
class BenchConfig:
    covers: tuple
    watermark: Path
    key_path: Path
    key: WatermarkKey
    attacks: tuple
    methods: tuple
    output_dir: Path


def load_bench_config(path) -> BenchConfig:
    """Parse and validate a bench config; paths resolve relative to the file."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise KeyFormatError(f"{path}: invalid bench config: {exc}") from exc
    if not isinstance(doc, dict):
        raise KeyFormatError(f"{path}: bench config must be a JSON object")
    unknown = sorted(set(doc) - _CONFIG_FIELDS)
    if unknown:
        raise KeyFormatError(f"{path}: unknown config field(s): {', '.join(unknown)}")
    missing = sorted(_REQUIRED_FIELDS - set(doc))
    if missing:
        raise KeyFormatError(f"{path}: missing config field(s): {', '.join(missing)}")

    base = path.parent
    covers = doc["covers"]
    if not isinstance(covers, list) or not covers:
        raise KeyFormatError(f"{path}: 'covers' must be a non-empty list of paths")
    cover_paths = tuple((base / c) for c in covers)

    seeds = doc.get("attack_seeds", [1])
    if not isinstance(seeds, list) or not seeds or not all(
        isinstance(s, int) and not isinstance(s, bool) for s in seeds
    ):
        raise KeyFormatError(f"{path}: 'attack_seeds' must be a non-empty list of integers")

    attacks = []
    if not isinstance(doc["attacks"], list) or not doc["attacks"]:
        raise KeyFormatError(f"{path}: 'attacks' must be a non-empty list")
    for entry in doc["attacks"]:
        if not isinstance(entry, dict) or set(entry) != {"kind", "params"}:
            raise KeyFormatError(f"{path}: each attack needs exactly 'kind' and 'params'")
        params = entry["params"]
        if not isinstance(params, list) or not params:
            raise KeyFormatError(f"{path}: attack 'params' must be a non-empty list")
        for p in params:
            AttackSpec(kind=entry["kind"], param=p, seed=seeds[0])  # validates ranges
        attacks.append(BenchAttack(kind=entry["kind"], params=tuple(params), seeds=tuple(seeds)))

    methods = tuple(doc.get("methods", METHODS))
    bad = [m for m in methods if m not in METHODS]
    if bad or not methods:
        raise KeyFormatError(f"{path}: methods must be drawn from {METHODS}")

    out_dir = base / doc["output_dir"]
    inputs = [*cover_paths, base / doc["watermark"], base / doc["key"]]
    out_resolved = out_dir.resolve()
    for p in inputs:
        rp = p.resolve()
        if rp == out_resolved or out_resolved in rp.parents:
            raise KeyFormatError(f"{path}: input {p} would live inside the output directory")

    return BenchConfig(
        covers=cover_paths,
        watermark=base / doc["watermark"],
        key_path=base / doc["key"],
        key=load_key(base / doc["key"]),
        attacks=tuple(attacks),
        methods=methods,
        output_dir=out_dir,
    )


def method_permutation(method: str, length: int, key: WatermarkKey) -> np.ndarray:
    if method == "ca-rule-7":
        return scramble_permutation(length, key.scramble)
    if method == "fisher-yates":
        return fisher_yates_permutation(length, key.scramble.seed)
    if method == "direct-lsb":
        return np.arange(length, dtype=np.int64)
    raise ValueError(f"unknown method {method!r}")


def run_bench(cfg: BenchConfig) -> list:
    """Execute the full grid; returns the list of cell failures (may be empty)."""
    wm_bits = imgio.to_bits(imgio.read_image(cfg.watermark))
    if wm_bits.shape != (cfg.key.wm_height, cfg.key.wm_width):
        raise DimensionError(
            f"watermark image is {wm_bits.shape}, key says "
            f"({cfg.key.wm_height}, {cfg.key.wm_width})"
        )
    covers = {p: imgio.read_image(p) for p in cfg.covers}

    rows = []
    failures = []
    for cover_path in cfg.covers:
        cover = covers[cover_path]
        for method in cfg.methods:
            try:
                perm = method_permutation(method, cover.size, cfg.key)
                marked = embed_with_permutation(cover, wm_bits, cfg.key, perm)
                scrambled = apply_permutation(cover, perm)
                gdd_norm, gdd_raw = metrics.gdd(cover, scrambled)
                e_gd_orig = metrics.gray_difference_mean(cover)
                e_gd_scr = metrics.gray_difference_mean(scrambled)
                hist_equal = bool(
                    (metrics.histogram(cover) == metrics.histogram(scrambled)).all()
                )
            except Exception as exc:  # whole method unusable on this cover
                failures.append(
                    {"cell": f"{cover_path.stem}__{method}", "error": str(exc)}
                )
                continue
            for attack in cfg.attacks:
                for param in attack.params:
                    for seed in attack.seeds:
                        cell = f"{cover_path.stem}__{method}__{attack.kind}-{param}__s{seed}"
                        try:
                            attacked = AttackSpec(attack.kind, param, seed).apply(marked)
                            extracted = extract_with_permutation(attacked, cfg.key, perm)
                            report = metrics.EvalReport(
                                e_gd_original=e_gd_orig,
                                e_gd_test=e_gd_scr,
                                gdd_normalized=gdd_norm,
                                gdd_raw=gdd_raw,
                                psnr_db=metrics.psnr(cover, attacked),
                                ber=metrics.ber(wm_bits, extracted),
                                nc=metrics.nc(wm_bits, extracted),
                                histogram_equal=hist_equal,
                            )
                        except Exception as exc:
                            failures.append({"cell": cell, "error": str(exc)})
                            continue
                        cell_dir = cfg.output_dir / cell
                        imgio.write_image(cell_dir / "attacked.png", attacked)
                        imgio.write_image(
                            cell_dir / "extracted.png", imgio.bits_to_image(extracted)
                        )
                        (cell_dir / "report.json").write_text(
                            json.dumps(report.as_json_dict(), sort_keys=True, indent=2)
                            + "\n",
                            encoding="utf-8",
                        )
                        rows.append(
                            {
                                "cover": cover_path.stem,
                                "method": method,
                                "attack": attack.kind,
                                "param": param,
                                "attack_seed": seed,
                                "ber": report.ber,
                                "nc": report.nc,
                                "psnr_db": report.psnr_db,
                                "gdd_normalized": report.gdd_normalized,
                                "e_gd_original": report.e_gd_original,
                                "e_gd_scrambled": report.e_gd_test,
                            }
                        )

    _write_csv(cfg.output_dir / "bench.csv", rows)
    _write_summary(cfg.output_dir / "summary.json", cfg, rows, failures)
    return failures


def _fmt(value):
    if isinstance(value, float) and not np.isfinite(value):
        return "inf"
    return value


def _write_csv(path: Path, rows: list) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _fmt(v) for k, v in row.items()})
    tmp.replace(path)


def _write_summary(path: Path, cfg: BenchConfig, rows: list, failures: list) -> None:
    groups = {}
    order = []
    for row in rows:
        k = (row["cover"], row["method"], row["attack"], row["param"])
        if k not in groups:
            groups[k] = []
            order.append(k)
        groups[k].append(row)
    means = []
    for k in order:
        cells = groups[k]
        means.append(
            {
                "cover": k[0],
                "method": k[1],
                "attack": k[2],
                "param": k[3],
                "seeds": len(cells),
                "ber_mean": _fmt(float(np.mean([c["ber"] for c in cells]))),
                "nc_mean": _fmt(float(np.mean([c["nc"] for c in cells]))),
                "psnr_db_mean": _fmt(float(np.mean([c["psnr_db"] for c in cells]))),
            }
        )
    doc = {
        "covers": [str(p) for p in cfg.covers],
        "watermark": str(cfg.watermark),
        "key": str(cfg.key_path),
        "methods": list(cfg.methods),
        "cells_ok": len(rows),
        "failures": failures,
        "means": means,
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    tmp.replace(path)
