"""File formats: YAML for humans, JSON lines for machines.

Windows serialize as ``{lo, hi, symbols, levels}`` with Unknown written as
``"?"`` in both lists. Oxtoby spec files hold ``{ratios, symbols, depth}``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import IO, Iterable, Optional

import yaml

from ..core.growth import FastGrowth, LeveledWindow, Window, oxtoby_window
from ..errors import ConfigError
from ..ttype import OxtobySpec, oxtoby_spec_from_sequence

UNKNOWN = "?"


def dump_human(obj) -> str:
    return yaml.safe_dump(obj, sort_keys=False, default_flow_style=None)


def load_human(text: str):
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"unparseable input: {exc}") from None


def load_file(path) -> object:
    """YAML or JSON document (JSON is read by the YAML parser too)."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    return load_human(text)


def write_jsonl(records: Iterable[dict], stream: IO[str]):
    for rec in records:
        stream.write(json.dumps(rec, sort_keys=True) + "\n")


def read_jsonl(stream: IO[str]) -> list:
    return [json.loads(line) for line in stream if line.strip()]


def window_record(lw: LeveledWindow, labels=None) -> dict:
    symbols = lw.render(labels, unknown=UNKNOWN)
    if labels is None:
        symbols = [s if s == UNKNOWN else int(s[1:]) for s in symbols]
    return {"lo": lw.window.lo, "hi": lw.window.hi, "symbols": symbols,
            "levels": [UNKNOWN if lv is None else lv for lv in lw.levels]}


def parse_window(rec: dict):
    """Inverse of ``window_record``: (Window, symbols with None for Unknown).

    ``levels`` is optional on input, since factor recovery needs only symbols.
    """
    if not isinstance(rec, dict) or not {"lo", "hi", "symbols"} <= set(rec):
        raise ConfigError("a window needs lo, hi and symbols")
    try:
        win = Window(int(rec["lo"]), int(rec["hi"]))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad window bounds: {exc}") from None
    symbols = [None if s == UNKNOWN else s for s in rec["symbols"]]
    if len(symbols) != len(win):
        raise ConfigError(f"{len(symbols)} symbols for a window of length {len(win)}")
    return win, symbols


def spec_record(spec: OxtobySpec) -> dict:
    return {"ratios": list(spec.fg.ratios), "symbols": list(spec.symbols), "depth": spec.depth}


def parse_spec(rec: dict) -> OxtobySpec:
    if not isinstance(rec, dict) or "ratios" not in rec or "symbols" not in rec:
        raise ConfigError("a spec needs ratios and symbols")
    try:
        fg = FastGrowth(tuple(rec["ratios"]))
        return oxtoby_spec_from_sequence(rec["symbols"], fg, rec.get("depth"))
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from None


def load_spec(path) -> OxtobySpec:
    return parse_spec(load_file(path))


def spec_window_record(spec: OxtobySpec, window: Window) -> dict:
    return window_record(oxtoby_window(spec.fg, window), spec.symbols)


def parse_ratios(text: Optional[str]) -> tuple:
    if not text:
        raise ConfigError("ratios are required, e.g. 3,3,3,3")
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise ConfigError(f"ratios must be comma separated integers, got {text!r}") from None
