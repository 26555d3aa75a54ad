import json

import numpy as np

from camark.cli import main
from camark.imgio import read_pgm, to_bits, write_pgm
from camark.keyfile import key_from_dict, save_key


def write_key(tmp_path, **overrides):
    doc = {
        "seed": 20240809,
        "rule": 7,
        "generations": 20,
        "bit_plane": 0,
        "repetition": 9,
        "mode": "substitute",
        "wm_height": 32,
        "wm_width": 32,
    }
    doc.update(overrides)
    path = tmp_path / "key.json"
    save_key(key_from_dict(doc), path)
    return path


def test_scramble_unscramble_round_trip(tmp_path, assets_dir):
    key = write_key(tmp_path)
    cover = assets_dir / "cover_64.pgm"
    scrambled = tmp_path / "s.pgm"
    restored = tmp_path / "r.pgm"
    assert main(["scramble", "--in", str(cover), "--key", str(key), "--out", str(scrambled)]) == 0
    assert main(["unscramble", "--in", str(scrambled), "--key", str(key), "--out", str(restored)]) == 0
    assert restored.read_bytes() == cover.read_bytes()
    assert scrambled.read_bytes() != cover.read_bytes()


def test_scramble_keeps_histogram(tmp_path, assets_dir, capsys):
    key = write_key(tmp_path)
    cover = assets_dir / "cover_64.pgm"
    scrambled = tmp_path / "s.pgm"
    main(["scramble", "--in", str(cover), "--key", str(key), "--out", str(scrambled)])
    assert main(["metrics", "--kind", "histogram", "--in", str(cover), "--in", str(scrambled)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"kind": "histogram", "histogram_equal": True}


def test_corrupt_key_exits_2(tmp_path, assets_dir, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken", encoding="utf-8")
    rc = main([
        "scramble", "--in", str(assets_dir / "cover_64.pgm"),
        "--key", str(bad), "--out", str(tmp_path / "s.pgm"),
    ])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_embed_extract_round_trip(tmp_path, assets_dir):
    key = write_key(tmp_path)
    marked = tmp_path / "marked.pgm"
    recovered = tmp_path / "wm_out.pgm"
    rc = main([
        "embed", "--in", str(assets_dir / "cover_256.pgm"), "--key", str(key),
        "--wm", str(assets_dir / "watermark_32.pgm"), "--out", str(marked),
    ])
    assert rc == 0
    rc = main(["extract", "--in", str(marked), "--key", str(key), "--out", str(recovered)])
    assert rc == 0
    original = to_bits(read_pgm(assets_dir / "watermark_32.pgm"))
    assert np.array_equal(to_bits(read_pgm(recovered)), original)


def test_embed_capacity_exits_2(tmp_path, assets_dir, capsys):
    key = write_key(tmp_path)  # repetition 9 needs 9216 samples, cover has 4096
    rc = main([
        "embed", "--in", str(assets_dir / "cover_64.pgm"), "--key", str(key),
        "--wm", str(assets_dir / "watermark_32.pgm"), "--out", str(tmp_path / "m.pgm"),
    ])
    assert rc == 2
    assert "error" in capsys.readouterr().err
    assert not (tmp_path / "m.pgm").exists()


def test_embed_imperceptibility(tmp_path, assets_dir, capsys):
    # 1024-bit payload on 65536 samples at plane 0: analytic floor is
    # 10*log10(255^2 * 64) = 66.2 dB, so 51 dB has wide margin
    key = write_key(tmp_path, repetition=1)
    marked = tmp_path / "marked.pgm"
    main([
        "embed", "--in", str(assets_dir / "cover_256.pgm"), "--key", str(key),
        "--wm", str(assets_dir / "watermark_32.pgm"), "--out", str(marked),
    ])
    assert main([
        "metrics", "--kind", "psnr",
        "--in", str(assets_dir / "cover_256.pgm"), "--in", str(marked),
    ]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["psnr_db"] >= 51.0


def test_mode_override(tmp_path, assets_dir):
    key = write_key(tmp_path, repetition=1, mode="substitute")
    marked = tmp_path / "m.pgm"
    rc = main([
        "embed", "--in", str(assets_dir / "cover_256.pgm"), "--key", str(key),
        "--wm", str(assets_dir / "watermark_32.pgm"), "--out", str(marked),
        "--mode", "or",
    ])
    assert rc == 0
    # OR mode can only set plane-0 bits, never clear them
    cover = read_pgm(assets_dir / "cover_256.pgm")
    markd = read_pgm(marked)
    assert ((markd & 1) >= (cover & 1)).all()


def test_attack_noise_zero_preserves_pgm_bytes(tmp_path, assets_dir):
    out = tmp_path / "a.pgm"
    rc = main([
        "attack", "--kind", "noise", "--param", "0", "--seed", "5",
        "--in", str(assets_dir / "cover_64.pgm"), "--out", str(out),
    ])
    assert rc == 0
    assert out.read_bytes() == (assets_dir / "cover_64.pgm").read_bytes()


def test_attack_jpeg_quality_zero_exits_2(tmp_path, assets_dir):
    rc = main([
        "attack", "--kind", "jpeg", "--param", "0", "--seed", "1",
        "--in", str(assets_dir / "cover_64.pgm"), "--out", str(tmp_path / "a.pgm"),
    ])
    assert rc == 2


def test_attack_crop_localized(tmp_path, assets_dir):
    out = tmp_path / "c.pgm"
    main([
        "attack", "--kind", "crop", "--param", "0.25", "--seed", "3",
        "--in", str(assets_dir / "cover_256.pgm"), "--out", str(out),
    ])
    before = read_pgm(assets_dir / "cover_256.pgm")
    after = read_pgm(out)
    diff = before != after
    rows = np.flatnonzero(diff.any(axis=1))
    cols = np.flatnonzero(diff.any(axis=0))
    assert rows.size and cols.size
    assert (after[rows.min() : rows.max() + 1, cols.min() : cols.max() + 1] == 0).all()
    outside = diff.copy()
    outside[rows.min() : rows.max() + 1, cols.min() : cols.max() + 1] = False
    assert not outside.any()


def test_metrics_gdd_of_self_is_zero(tmp_path, assets_dir, capsys):
    cover = str(assets_dir / "cover_64.pgm")
    assert main(["metrics", "--kind", "gdd", "--in", cover, "--in", cover]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["gdd_normalized"] == 0.0
    assert doc["gdd_raw"] == 0.0


def test_metrics_psnr_identical_prints_inf(tmp_path, assets_dir, capsys):
    cover = str(assets_dir / "cover_64.pgm")
    assert main(["metrics", "--kind", "psnr", "--in", cover, "--in", cover]) == 0
    assert json.loads(capsys.readouterr().out)["psnr_db"] == "inf"


def test_metrics_ber_nc_on_bilevel(tmp_path, capsys):
    a = tmp_path / "a.pgm"
    b = tmp_path / "b.pgm"
    write_pgm(a, np.array([[0, 255, 255, 0]], np.uint8))
    write_pgm(b, np.array([[0, 0, 255, 0]], np.uint8))
    main(["metrics", "--kind", "ber", "--in", str(a), "--in", str(b)])
    assert json.loads(capsys.readouterr().out)["ber"] == 0.25
    main(["metrics", "--kind", "nc", "--in", str(a), "--in", str(b)])
    assert json.loads(capsys.readouterr().out)["nc"] == 0.5


def test_metrics_matches_library_exactly(tmp_path, assets_dir, capsys):
    from camark import gdd, gray_difference_mean, psnr

    cover = read_pgm(assets_dir / "cover_64.pgm")
    other = tmp_path / "other.pgm"
    write_pgm(other, 255 - cover)
    a, b = str(assets_dir / "cover_64.pgm"), str(other)
    main(["metrics", "--kind", "gdd", "--in", a, "--in", b])
    doc = json.loads(capsys.readouterr().out)
    norm, raw = gdd(cover, 255 - cover)
    assert doc["gdd_normalized"] == norm and doc["gdd_raw"] == raw
    assert doc["e_gd_original"] == gray_difference_mean(cover)
    main(["metrics", "--kind", "psnr", "--in", a, "--in", b])
    assert json.loads(capsys.readouterr().out)["psnr_db"] == psnr(cover, 255 - cover)


def test_metrics_needs_two_inputs(tmp_path, assets_dir, capsys):
    rc = main(["metrics", "--kind", "psnr", "--in", str(assets_dir / "cover_64.pgm")])
    assert rc == 2


def test_missing_input_exits_2(tmp_path):
    key = write_key(tmp_path)
    rc = main([
        "scramble", "--in", str(tmp_path / "missing.pgm"),
        "--key", str(key), "--out", str(tmp_path / "o.pgm"),
    ])
    assert rc == 2


def test_outputs_are_deterministic(tmp_path, assets_dir):
    key = write_key(tmp_path, repetition=1)
    outs = []
    for name in ("one.pgm", "two.pgm"):
        out = tmp_path / name
        main([
            "embed", "--in", str(assets_dir / "cover_256.pgm"), "--key", str(key),
            "--wm", str(assets_dir / "watermark_32.pgm"), "--out", str(out),
        ])
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
