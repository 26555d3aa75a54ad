"""Key documents: flat JSON with exactly the eight secret fields.

Unknown fields are rejected rather than ignored so a mistyped field can
never silently change what a key means.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import KeyFormatError
from .scramble import ScrambleKey
from .watermark import WatermarkKey

_INT_FIELDS = ("seed", "rule", "generations", "bit_plane", "repetition", "wm_height", "wm_width")
FIELDS = _INT_FIELDS + ("mode",)


def key_from_dict(doc: dict) -> WatermarkKey:
    if not isinstance(doc, dict):
        raise KeyFormatError(f"key document must be a JSON object, got {type(doc).__name__}")
    unknown = sorted(set(doc) - set(FIELDS))
    if unknown:
        raise KeyFormatError(f"unknown key field(s): {', '.join(unknown)}")
    missing = sorted(set(FIELDS) - set(doc))
    if missing:
        raise KeyFormatError(f"missing key field(s): {', '.join(missing)}")
    for name in _INT_FIELDS:
        if isinstance(doc[name], bool) or not isinstance(doc[name], int):
            raise KeyFormatError(f"field {name!r} must be an integer, got {doc[name]!r}")
    if not isinstance(doc["mode"], str):
        raise KeyFormatError(f"field 'mode' must be a string, got {doc['mode']!r}")
    return WatermarkKey(
        scramble=ScrambleKey(
            seed=doc["seed"], rule=doc["rule"], generations=doc["generations"]
        ),
        wm_height=doc["wm_height"],
        wm_width=doc["wm_width"],
        bit_plane=doc["bit_plane"],
        repetition=doc["repetition"],
        mode=doc["mode"],
    )


def key_to_dict(key: WatermarkKey) -> dict:
    return {
        "seed": key.scramble.seed,
        "rule": key.scramble.rule,
        "generations": key.scramble.generations,
        "bit_plane": key.bit_plane,
        "repetition": key.repetition,
        "mode": key.mode,
        "wm_height": key.wm_height,
        "wm_width": key.wm_width,
    }


def load_key(path) -> WatermarkKey:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise KeyFormatError(f"{path}: invalid key document: {exc}") from exc
    return key_from_dict(doc)


def save_key(key: WatermarkKey, path) -> None:
    Path(path).write_text(json.dumps(key_to_dict(key), indent=2) + "\n", encoding="utf-8")
