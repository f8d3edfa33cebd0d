"""Exhaustive window-scale checks of the finite combinatorial lemmas.

Every check is split into an instance generator and a verifier. Instances are
plain JSON-ready dicts carrying everything the verifier needs, so a reported
counterexample replays on its own: ``replay(lemma_id, fg, instance)``.

Identifiers follow the lemma numbering used throughout the project:

    L3.4     nested aligned intervals: fully periodic, or same unfilled set
    L4.8     certified aperiodic positions read x_{i+1} under S^{n_i} z
    L5.4     each aligned p_i-interval is a p_j-p_i-piece for exactly one j
    L5.5     level-l positions are covered by p_l-p_i-pieces
    L5.6     a p_j-p_i-piece exists among the first p_{j-1} / p_i cells
    L5.8     closed form of the p_{i+1}-p_i-pieces
    L5.9     closed form of the p_{i+2}-p_i-pieces
    L5.10    the class of a level-i position mod p_{i-1} reaches every level j > i
    L6.2     maximal blocks: exact shape around multiples of p_m, else one level down
    L6.3     block content is a centred word z[-q_i - 1, q_i]
    L6.4     content class i means maximal at level i + 1
    L6.5     endpoints of new blocks are congruent mod the smaller period
    T6.1fwd  z(n) = z(-n-1) and (S^m z)^{-1} = S^{-m-1} z
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from ..core.growth import FastGrowth, Window
from ..core.points import OdometerElement, Toeplitz, aperiodic_element, eval_point, point_level
from ..core.structure import (aligned_intervals, content_class, maximal_blocks, piece_level,
                              reverse_window)
from ..errors import BoundsTooSmall, UnknownLemma

SKIP = "skip"
APERIODIC_TARGETS = (0, 1, -1)


@dataclass(frozen=True)
class Lemma:
    id: str
    summary: str
    instances: Callable[..., Iterable[dict]]
    verify: Callable[[FastGrowth, dict], Optional[str]]


@dataclass(frozen=True)
class CheckResult:
    lemma: str
    instances: int
    skipped: int
    counterexample: Optional[dict]

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def campaign_points(fg: FastGrowth, seed: int = 0) -> list:
    """Points the piece lemmas quantify over: z, a few shifts, and aperiodic elements.

    Returns (kind, parameter, element) triples; shifts beyond the fixed ones are
    drawn from ``seed``.
    """
    rng = random.Random(seed)
    pL = fg.p[-1]
    shifts = [0, 1, -1]
    for m in rng.sample(range(-pL, pL), min(2, 2 * pL)):
        if m not in shifts:
            shifts.append(m)
    out = [("shift", m, OdometerElement.from_shift(fg, m)) for m in shifts]
    for t in APERIODIC_TARGETS:
        try:
            out.append(("aperiodic", t, aperiodic_element(fg, t)))
        except RuntimeError:
            # reported by L4.8; the other checks simply lose this point
            continue
    return out


def _point_fields(el: OdometerElement) -> dict:
    return {"digits": list(el.digits), "certificate": sorted(el.certificate)}


def _element(inst: dict) -> OdometerElement:
    return OdometerElement(tuple(inst["digits"]), frozenset(inst.get("certificate", ())))


def _known_piece_level(fg, el, i, lo):
    j = piece_level(fg, el, i, lo)
    return None if j == "unknown" else j


# --- nested intervals -----------------------------------------------------------------

def _l34_instances(fg, window, points):
    for i in range(1, fg.depth + 1):
        pi = fg.p[i]
        k = -(-window.lo // pi)
        while (k + 1) * pi <= window.hi:
            for j in range(i, fg.depth + 1):
                yield {"i": i, "j": j, "k": k}
            k += 1


def _l34_verify(fg, inst):
    i, j, k = inst["i"], inst["j"], inst["k"]
    cell = range(k * fg.p[i], (k + 1) * fg.p[i])
    if all(fg.in_per(n, j) for n in cell):
        return None
    unfilled_j = [n for n in cell if not fg.in_per(n, j)]
    unfilled_i = [n for n in cell if not fg.in_per(n, i)]
    if unfilled_j != unfilled_i:
        return f"unfilled after step {j}: {unfilled_j}; after step {i}: {unfilled_i}"
    return None


# --- aperiodic digits -----------------------------------------------------------------

def _l48_instances(fg, window, points):
    for t in APERIODIC_TARGETS:
        yield {"kind": "search", "target": t}
    for kind, t, el in points:
        if kind != "aperiodic":
            continue
        yield {"kind": "digits", "target": t, **_point_fields(el)}
        for i, d in enumerate(el.digits, 1):
            if -d < t < fg.p[i] - d:
                yield {"kind": "value", "target": t, "i": i, **_point_fields(el)}


def _l48_verify(fg, inst):
    t = inst["target"]
    if inst["kind"] == "search":
        try:
            aperiodic_element(fg, t)
        except RuntimeError as exc:
            return str(exc)
        return None
    el = _element(inst)
    if inst["kind"] == "digits":
        if not el.is_coherent(fg):
            return f"digits {list(el.digits)} are not coherent"
        if not el.certificate_holds(fg):
            return f"position {t} is periodic at some depth"
        gaps = [fg.p[i] - d for i, d in enumerate(el.digits, 1)]
        if any(b < a for a, b in zip(el.digits, el.digits[1:])):
            return f"digits {list(el.digits)} decrease"
        if any(b < a for a, b in zip(gaps, gaps[1:])):
            return f"p_i - n_i = {gaps} decreases"
        return None
    i = inst["i"]
    lv = fg.level(t + el.digits[i - 1])
    expected = i + 1 if i < fg.depth else None
    if lv != expected:
        return f"S^{el.digits[i - 1]} z({t}) has level {lv}, expected {expected}"
    return None


# --- pieces ---------------------------------------------------------------------------

def _l54_instances(fg, window, points):
    for _, _, el in points:
        for i in range(1, fg.depth):
            for lo in aligned_intervals(fg, el, i, window):
                yield {"i": i, "lo": lo, **_point_fields(el)}


def _l54_verify(fg, inst):
    el = _element(inst)
    j = piece_level(fg, el, inst["i"], inst["lo"])
    if j == "unknown":
        return SKIP
    if j is None or j <= inst["i"]:
        return f"non-periodic positions of [{inst['lo']}, +p_{inst['i']}) do not share a level > i"
    return None


def _l55_instances(fg, window, points):
    for _, _, el in points:
        for n in window:
            l = point_level(fg, el, n)
            if l is None:
                continue
            for i in range(1, l):
                yield {"i": i, "l": l, "n": n, **_point_fields(el)}


def _l55_verify(fg, inst):
    el = _element(inst)
    i, l, n = inst["i"], inst["l"], inst["n"]
    if point_level(fg, el, n) != l:
        return f"position {n} no longer has level {l}"
    lo = n - (n + el.digits[i - 1]) % fg.p[i]
    j = _known_piece_level(fg, el, i, lo)
    if j != l:
        return f"position {n} of level {l} lies in [{lo}, +p_{i}) classified as {j}"
    return None


def _l56_instances(fg, window, points):
    for _, _, el in points:
        for j in range(2, fg.depth + 1):
            for i in range(1, j):
                yield {"i": i, "j": j, **_point_fields(el)}


def _l56_verify(fg, inst):
    el = _element(inst)
    i, j = inst["i"], inst["j"]
    nj = el.digits[j - 1]
    for l in range(fg.p[j - 1] // fg.p[i]):
        if _known_piece_level(fg, el, i, l * fg.p[i] - nj) == j:
            return None
    return f"no p_{j}-p_{i}-piece among the first {fg.p[j - 1] // fg.p[i]} cells"


def _aligned_instances(offset):
    def gen(fg, window, points):
        for _, _, el in points:
            for i in range(1, fg.depth - offset + 1):
                for lo in aligned_intervals(fg, el, i, window):
                    yield {"i": i, "lo": lo, **_point_fields(el)}
    return gen


def _l58_verify(fg, inst):
    el = _element(inst)
    i, lo = inst["i"], inst["lo"]
    is_piece = _known_piece_level(fg, el, i, lo) == i + 1
    s = lo + el.digits[i]
    big = fg.p[i + 1]
    in_family = s % big == 0 or (s + fg.p[i]) % big == 0
    if is_piece != in_family:
        return f"[{lo}, +p_{i}): piece={is_piece}, closed form={in_family}"
    return None


def _l59_verify(fg, inst):
    el = _element(inst)
    i, lo = inst["i"], inst["lo"]
    pi, pmid, big = fg.p[i], fg.p[i + 1], fg.p[i + 2]
    is_piece = _known_piece_level(fg, el, i, lo) == i + 2
    shift = el.digits[i + 1]
    hi = lo + pi
    in_family = False
    base = (lo + shift) // big
    for k in (base - 1, base, base + 1):
        anchor = k * big - shift
        if anchor + pi <= lo and hi <= anchor + pmid - pi:
            in_family = True
        if anchor + pi - pmid <= lo and hi <= anchor - pi:
            in_family = True
    if is_piece != in_family:
        return f"[{lo}, {hi}): piece={is_piece}, closed form={in_family}"
    return None


def _l510_instances(fg, window, points):
    for _, _, el in points:
        for n in window:
            i = point_level(fg, el, n)
            if i is None or i < 2:
                continue
            for j in range(i + 1, fg.depth + 1):
                yield {"n": n, "i": i, "j": j, **_point_fields(el)}


def _l510_verify(fg, inst):
    el = _element(inst)
    n, i, j = inst["n"], inst["i"], inst["j"]
    step = fg.p[i - 1]
    for k in range(1, fg.p[j] // step + 1):
        if point_level(fg, el, n + k * step) == j:
            return None
    return f"no level-{j} position in {n} + k * {step}, 1 <= k <= {fg.p[j] // step}"


# --- maximal blocks -------------------------------------------------------------------

def _maximal_at(fg, n0, n1, m):
    if m < 1:
        return False
    return (all(fg.in_per(n, m) for n in range(n0, n1 + 1))
            and not fg.in_per(n0 - 1, m) and not fg.in_per(n1 + 1, m))


def _block_instances(fg, window, points):
    for m in range(1, fg.depth + 1):
        for b in maximal_blocks(fg, m, window):
            yield {"m": m, "n0": b.n0, "n1": b.n1}


def _l62_verify(fg, inst):
    m, n0, n1 = inst["m"], inst["n0"], inst["n1"]
    if not _maximal_at(fg, n0, n1, m):
        return f"[{n0}, {n1}] is not a maximal p_{m}-block"
    pm = fg.p[m]
    k = -(-n0 // pm)
    if k * pm <= n1:
        shape = (k * pm - fg.q[m - 1] - 1, k * pm + fg.q[m - 1])
        if (n0, n1) != shape:
            return f"[{n0}, {n1}] contains {k * pm} but the shape is [{shape[0]}, {shape[1]}]"
        return None
    if not _maximal_at(fg, n0, n1, m - 1):
        return f"[{n0}, {n1}] contains no multiple of p_{m} yet is not maximal at level {m - 1}"
    return None


def _l63_verify(fg, inst):
    if content_class(fg, inst["n0"], inst["n1"], inst["m"]) is None:
        return f"[{inst['n0']}, {inst['n1']}] matches no centred word z[-q_i - 1, q_i], i < {inst['m']}"
    return None


def _l64_verify(fg, inst):
    c = content_class(fg, inst["n0"], inst["n1"], inst["m"])
    if c is None:
        return SKIP
    if not _maximal_at(fg, inst["n0"], inst["n1"], c + 1):
        return f"[{inst['n0']}, {inst['n1']}] has content class {c} but is not maximal at {c + 1}"
    return None


def _l65_instances(fg, window, points):
    fresh = []
    for m in range(1, fg.depth + 1):
        for b in maximal_blocks(fg, m, window):
            # not maximal one level down: it holds a position filled exactly at step m
            if any(fg.level(n) == m for n in range(b.n0, b.n1 + 1)):
                fresh.append((m, b.n0, b.n1))
    for a, n0, n1 in fresh:
        for b, n2, n3 in fresh:
            if a <= b:
                yield {"m1": a - 1, "n0": n0, "n1": n1, "m2": b - 1, "n2": n2, "n3": n3}


def _l65_verify(fg, inst):
    mod = fg.p[inst["m1"] + 1]
    d_left = inst["n2"] - inst["n0"]
    d_right = inst["n1"] - inst["n3"]
    if d_left % mod or d_right % mod:
        return f"p_{inst['m1'] + 1} = {mod} does not divide {d_left} and {d_right}"
    return None


# --- reversal -------------------------------------------------------------------------

def _t61_instances(fg, window, points):
    for n in window:
        yield {"kind": "position", "n": n}
    shifts = sorted({m for kind, m, _ in points if kind == "shift"} |
                    set(range(-fg.p[1], fg.p[1] + 1)))
    for m in shifts:
        yield {"kind": "shift", "shift": m, "lo": window.lo, "hi": window.hi}


def _t61_verify(fg, inst):
    if inst["kind"] == "position":
        n = inst["n"]
        if fg.level(n) != fg.level(-n - 1):
            return f"z({n}) has level {fg.level(n)} but z({-n - 1}) has {fg.level(-n - 1)}"
        return None
    m = inst["shift"]
    win = Window(inst["lo"], inst["hi"])
    values = [eval_point(Toeplitz(m), fg, n) for n in win]
    rwin, rvalues = reverse_window(win, values)
    expected = tuple(eval_point(Toeplitz(-m - 1), fg, n) for n in rwin)
    if rvalues != expected:
        bad = next(n for n, a, b in zip(rwin, rvalues, expected) if a != b)
        return f"(S^{m} z)^-1 differs from S^{-m - 1} z at {bad}"
    return None


LEMMAS = {lem.id: lem for lem in (
    Lemma("L3.4", "nested aligned intervals", _l34_instances, _l34_verify),
    Lemma("L4.8", "aperiodic digits read the next symbol", _l48_instances, _l48_verify),
    Lemma("L5.4", "unique piece level", _l54_instances, _l54_verify),
    Lemma("L5.5", "pieces cover each level", _l55_instances, _l55_verify),
    Lemma("L5.6", "pieces exist early", _l56_instances, _l56_verify),
    Lemma("L5.8", "closed form of next-level pieces", _aligned_instances(1), _l58_verify),
    Lemma("L5.9", "closed form of two-level pieces", _aligned_instances(2), _l59_verify),
    Lemma("L5.10", "residue classes reach every higher level", _l510_instances, _l510_verify),
    Lemma("L6.2", "maximal block shape dichotomy", _block_instances, _l62_verify),
    Lemma("L6.3", "maximal block content", _block_instances, _l63_verify),
    Lemma("L6.4", "content class fixes the level", _block_instances, _l64_verify),
    Lemma("L6.5", "block endpoint divisibility", _l65_instances, _l65_verify),
    Lemma("T6.1fwd", "reversal is a shift", _t61_instances, _t61_verify),
)}


def get_lemma(lemma_id: str) -> Lemma:
    try:
        return LEMMAS[lemma_id]
    except KeyError:
        raise UnknownLemma(lemma_id) from None


def replay(lemma_id: str, fg: FastGrowth, instance: dict) -> Optional[str]:
    """Re-run one instance; returns the violation message, or None if it holds."""
    out = get_lemma(lemma_id).verify(fg, instance)
    return None if out == SKIP else out


def check_lemma(lemma_id: str, fg: FastGrowth, radius: int, seed: int = 0) -> CheckResult:
    """Scan every instance inside [-radius, radius); stop at the first violation."""
    lem = get_lemma(lemma_id)
    if radius < fg.p[-1]:
        raise BoundsTooSmall(f"radius {radius} < p_L = {fg.p[-1]}")
    window = Window.centered(radius)
    points = campaign_points(fg, seed)
    count = skipped = 0
    for inst in lem.instances(fg, window, points):
        out = lem.verify(fg, inst)
        if out == SKIP:
            skipped += 1
            continue
        count += 1
        if out is not None:
            return CheckResult(lemma_id, count, skipped, {"instance": inst, "violation": out})
    if count == 0:
        raise BoundsTooSmall(f"{lemma_id}: the window hosts no instance")
    return CheckResult(lemma_id, count, skipped, None)
