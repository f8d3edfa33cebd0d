"""Command line front end.

Exit codes: 0 success / all checks pass, 1 violations (or input that is not a
window of the system), 2 usage or configuration errors, including a window too
narrow to decide and campaign checks that could not run. ``OXTOBY_VERBOSITY``
(quiet, normal, verbose) sets the log level.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from ..core.growth import FastGrowth, LeveledWindow, Window, oxtoby_window
from ..core.points import OdometerElement, aperiodic_element, factor_digits
from ..core.structure import aligned_intervals, classify_piece, maximal_blocks
from ..errors import Ambiguous, ConfigError, DepthExceeded, NoMatch, OxtobyError
from ..ttype import (Different, EventuallyPeriodicSeq, Same, interleave_dense,
                     interleave_pointed, omega_limit, oxtoby_spec_from_sequence,
                     same_topological_type, theta)
from . import diagrams, formats
from .campaign import CampaignConfig, run_campaign
from .lemmas import LEMMAS

log = logging.getLogger("oxtoby")

VERBOSITY_ENV = "OXTOBY_VERBOSITY"
LEVELS = {"quiet": logging.ERROR, "normal": logging.WARNING, "verbose": logging.DEBUG}


def setup_logging():
    value = os.environ.get(VERBOSITY_ENV, "normal").strip().lower()
    if value not in LEVELS:
        raise ConfigError(f"{VERBOSITY_ENV} must be one of {', '.join(LEVELS)}, got {value!r}")
    logging.basicConfig(level=LEVELS[value], format="%(levelname)s %(name)s: %(message)s",
                        stream=sys.stderr, force=True)
    return value


def _emit(args, obj, text=None):
    if args.format == "jsonl":
        records = obj if isinstance(obj, list) else [obj]
        formats.write_jsonl(records, sys.stdout)
    elif args.format == "yaml" or text is None:
        sys.stdout.write(formats.dump_human(obj))
    else:
        print(text)


def _fg(args) -> FastGrowth:
    try:
        return FastGrowth(formats.parse_ratios(args.ratios))
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from None


def _window(args) -> Window:
    if args.radius is not None:
        if args.lo is not None or args.hi is not None:
            raise ConfigError("give either --radius or --lo/--hi")
        return Window.centered(args.radius)
    if args.lo is None or args.hi is None:
        raise ConfigError("a window needs --lo and --hi (or --radius)")
    return Window(args.lo, args.hi)


def _labels(args):
    if not args.symbols:
        return None
    return [s for s in args.symbols.split(",") if s]


def _shifted(fg, window, m) -> LeveledWindow:
    return LeveledWindow(window, tuple(fg.level(n + m) for n in window))


# --- subcommands ----------------------------------------------------------------------

def cmd_generate(args) -> int:
    if args.spec:
        spec = formats.load_spec(args.spec)
        fg, labels = spec.fg, list(spec.symbols)
    else:
        fg, labels = _fg(args), _labels(args)
    if labels is not None and len(labels) < fg.depth:
        raise ConfigError(f"{len(labels)} symbols for depth {fg.depth}")
    lw = _shifted(fg, _window(args), args.shift)
    _emit(args, formats.window_record(lw, labels), diagrams.render_window(lw, labels))
    return 0


def cmd_blocks(args) -> int:
    fg, win = _fg(args), _window(args)
    blocks = maximal_blocks(fg, args.m, win)
    recs = [{"n0": b.n0, "n1": b.n1, "m": b.m, "content_class": b.content_class,
             "anchored": b.anchored(fg)} for b in blocks]
    _emit(args, recs, diagrams.render_blocks(fg, args.m, win))
    return 0


def _element(args, fg) -> OdometerElement:
    if args.aperiodic is not None:
        return aperiodic_element(fg, args.aperiodic)
    return OdometerElement.from_shift(fg, args.shift)


def cmd_pieces(args) -> int:
    fg, win = _fg(args), _window(args)
    if not 1 <= args.i < fg.depth:
        raise ConfigError(f"--i must lie in 1..{fg.depth - 1}")
    el = _element(args, fg)
    recs = []
    for lo in aligned_intervals(fg, el, args.i, win):
        rec = {"lo": lo, "hi": lo + fg.p[args.i], "i": args.i}
        try:
            piece = classify_piece(fg, el, args.i, Window(lo, lo + fg.p[args.i]))
            rec["j"] = None if piece is None else piece.j
        except DepthExceeded:
            rec["j"] = formats.UNKNOWN
        recs.append(rec)
    _emit(args, recs, diagrams.render_pieces(fg, el, args.i, win))
    return 0


def cmd_factor(args) -> int:
    fg = _fg(args)
    labels = _labels(args)
    if args.input:
        win, values = formats.parse_window(formats.load_file(args.input))
    else:
        win = _window(args)
        lw = _shifted(fg, win, args.shift)
        values = [None if lv is None else (lv if labels is None else labels[lv - 1])
                  for lv in lw.levels]
    depth = args.depth or fg.depth
    try:
        digits = factor_digits(values, win, fg, depth, labels)
    except NoMatch as exc:
        log.error("%s", exc)
        return 1
    except (Ambiguous, DepthExceeded) as exc:
        raise ConfigError(str(exc)) from None
    _emit(args, {"digits": list(digits)}, " ".join(map(str, digits)))
    return 0


def _witness_record(w) -> dict:
    if isinstance(w, Same):
        return {"result": "same", "pairs": [list(p) for p in w.pairs], "bound": w.bound}
    sub = w.subseq
    return {"result": "different", "constant": w.constant, "start": sub.start,
            "modulus": sub.modulus, "residues": list(sub.residues)}


def cmd_ttype(args) -> int:
    try:
        s1 = EventuallyPeriodicSeq.parse(args.first)
        s2 = EventuallyPeriodicSeq.parse(args.second)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    w = same_topological_type(s1, s2)
    rec = _witness_record(w)
    rec["omega"] = [sorted(omega_limit(s1)), sorted(omega_limit(s2))]
    if isinstance(w, Different):
        sub = w.subseq
        where = (f"n >= {sub.start}, n mod {sub.modulus} in {list(sub.residues)}")
        text = f"different: sequence {w.constant} is eventually constant along {where}"
    else:
        text = "same: " + ", ".join(f"{a}->{b}" for a, b in w.pairs) + f" beyond {w.bound}"
    _emit(args, rec, text)
    return 0


def cmd_reduce(args) -> int:
    if args.transformer == "pointed":
        out = interleave_pointed(args.items)
        _emit(args, {"sequence": out}, " ".join(out))
    elif args.transformer == "dense":
        if args.q is None:
            raise ConfigError("dense needs --q")
        q = [s for s in args.q.split(",") if s]
        out = interleave_dense(args.items, q)
        _emit(args, {"sequence": out}, " ".join(out))
    elif args.transformer == "theta":
        out = theta(args.items)
        pairs = [[x, str(h)] for x, h in out]
        _emit(args, {"sequence": pairs}, " ".join(f"({x},{h})" for x, h in pairs))
    else:
        if args.spec:
            spec = formats.load_spec(args.spec)
        else:
            spec = oxtoby_spec_from_sequence(args.items, _fg(args))
        win = _window(args)
        rec = formats.spec_window_record(spec, win)
        _emit(args, rec, diagrams.render_window(oxtoby_window(spec.fg, win), list(spec.symbols)))
    return 0


def cmd_verify(args) -> int:
    raw = formats.load_file(args.config) if args.config else {}
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ConfigError("config must be a mapping")
    raw = dict(raw)
    if args.lemma:
        raw["lemmas"] = args.lemma
    if args.mutation:
        raw["mutation"] = args.mutation
    if args.jobs:
        raw["jobs"] = args.jobs
    if args.seed is not None:
        raw["seed"] = args.seed
    cfg = CampaignConfig.from_dict(raw)

    out = open(args.out, "w") if args.out else None
    try:
        def sink(rec):
            if out is not None:
                formats.write_jsonl([rec], out)
                out.flush()
            elif args.format == "jsonl":
                formats.write_jsonl([rec], sys.stdout)
        report = run_campaign(cfg, sink)
    finally:
        if out is not None:
            out.close()

    if args.format != "jsonl" or out is not None:
        for rec in report.records:
            line = f"{rec['status'].upper():5} {rec['lemma']:8} {rec['ratios']}"
            if rec["status"] == "fail":
                line += f"  {rec['counterexample']['violation']}"
            elif rec["status"] == "error":
                line += f"  {rec['error']}"
            print(line)
        c = report.counts()
        print(f"{c['pass']} pass, {c['fail']} fail, {c['error']} error")
    return report.exit_code()


# --- parser ---------------------------------------------------------------------------

def _add_window(p):
    p.add_argument("--lo", type=int)
    p.add_argument("--hi", type=int)
    p.add_argument("--radius", type=int, help="window [-R, R)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oxtoby", description="Oxtoby sequence toolkit")
    parser.add_argument("--format", choices=("text", "yaml", "jsonl"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a window of S^m z")
    p.add_argument("--ratios")
    p.add_argument("--spec", help="spec file {ratios, symbols, depth}")
    p.add_argument("--symbols", help="comma separated labels x_1, x_2, ...")
    p.add_argument("--shift", type=int, default=0)
    _add_window(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("blocks", help="maximal p_m-periodic blocks of z")
    p.add_argument("--ratios", required=True)
    p.add_argument("--m", type=int, required=True)
    _add_window(p)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("pieces", help="classify aligned p_i-intervals")
    p.add_argument("--ratios", required=True)
    p.add_argument("--i", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--shift", type=int, default=0)
    g.add_argument("--aperiodic", type=int, metavar="T",
                   help="use the aperiodic element certified at position T")
    _add_window(p)
    p.set_defaults(func=cmd_pieces)

    p = sub.add_parser("factor", help="recover odometer digits from a window")
    p.add_argument("--ratios", required=True)
    p.add_argument("--depth", type=int)
    p.add_argument("--input", help="window file {lo, hi, symbols}")
    p.add_argument("--symbols", help="labels of levels 1, 2, ... used in the input")
    p.add_argument("--shift", type=int, default=0, help="without --input: factor S^m z")
    _add_window(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("ttype", help="compare topological types, e.g. 'c c | a b'")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_ttype)

    p = sub.add_parser("reduce", help="apply a reduction transformer")
    p.add_argument("transformer", choices=("pointed", "dense", "theta", "oxtoby"))
    p.add_argument("items", nargs="*", help="input sequence (symbols for oxtoby)")
    p.add_argument("--q", help="dense: the interleaved sequence, comma separated")
    p.add_argument("--ratios")
    p.add_argument("--spec")
    _add_window(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="run a lemma campaign")
    p.add_argument("--config", help="YAML or JSON campaign config")
    p.add_argument("--out", help="write JSONL records here")
    p.add_argument("--lemma", action="append", choices=sorted(LEMMAS))
    p.add_argument("--mutation")
    p.add_argument("--jobs", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        setup_logging()
        return args.func(args)
    except (OxtobyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
