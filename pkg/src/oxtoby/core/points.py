"""Points of the orbit closure and their odometer coordinates.

A point y is handled through its digits (n_i) under the canonical factor map:
y has the same p_i-skeleton as S^{n_i} z, so Per_{p_i}(y) = Per_{p_i}(z) - n_i.
Toeplitz points are shifts S^m z; non-Toeplitz points carry a certificate of
positions that no finite depth makes periodic, all holding one filler symbol.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Sequence, Union

from ..errors import Ambiguous, DepthExceeded, NoMatch
from .growth import FastGrowth, Level, Window


@dataclass(frozen=True)
class OdometerElement:
    digits: tuple
    certificate: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        object.__setattr__(self, "certificate", frozenset(self.certificate))

    @classmethod
    def from_shift(cls, fg: FastGrowth, m: int, depth: int | None = None) -> "OdometerElement":
        depth = fg.depth if depth is None else depth
        return cls(tuple(m % fg.p[i] for i in range(1, depth + 1)))

    @property
    def depth(self) -> int:
        return len(self.digits)

    def is_coherent(self, fg: FastGrowth) -> bool:
        if len(self.digits) > fg.depth:
            return False
        for i, d in enumerate(self.digits, 1):
            if not 0 <= d < fg.p[i]:
                return False
            if i > 1 and d % fg.p[i - 1] != self.digits[i - 2]:
                return False
        return True

    def certificate_holds(self, fg: FastGrowth) -> bool:
        """Every certified position is outside Per_{p_i} at each available depth."""
        for t in self.certificate:
            for i, d in enumerate(self.digits, 1):
                if fg.in_per(t + d, i):
                    return False
        return True


@dataclass(frozen=True)
class Toeplitz:
    shift: int


@dataclass(frozen=True)
class NonToeplitz:
    element: OdometerElement
    filler: Hashable

    def __post_init__(self):
        if not self.element.certificate:
            raise ValueError("a non-Toeplitz point needs a nonempty certificate")


SystemPoint = Union[Toeplitz, NonToeplitz]


def point_digits(pt: SystemPoint, fg: FastGrowth) -> OdometerElement:
    if isinstance(pt, Toeplitz):
        return OdometerElement.from_shift(fg, pt.shift)
    return pt.element


def point_level(fg: FastGrowth, element: OdometerElement, n: int) -> Level:
    """Least j with n in Per_{p_j}(S^{n_j} z), or None past the available digits."""
    for j, d in enumerate(element.digits, 1):
        if fg.in_per(n + d, j):
            return j
    return None


def point_per_set(pt: SystemPoint, fg: FastGrowth, i: int, window: Window) -> frozenset:
    el = point_digits(pt, fg)
    if i < 1:
        raise ValueError(f"level index must be >= 1, got {i}")
    if i > el.depth:
        raise DepthExceeded(f"level {i} beyond {el.depth} available digits")
    shift = el.digits[i - 1]
    return frozenset(n for n in window if fg.in_per(n + shift, i))


def eval_point(pt: SystemPoint, fg: FastGrowth, n: int, depth_budget: int | None = None):
    """Symbol at position ``n``: a level index, the filler, or None when unknown."""
    if isinstance(pt, Toeplitz):
        return fg.level(n + pt.shift)
    digits = pt.element.digits
    budget = len(digits) if depth_budget is None else min(depth_budget, len(digits))
    for i in range(1, budget + 1):
        lv = fg.level(n + digits[i - 1])
        if lv is not None and lv <= i:
            return lv
    if n in pt.element.certificate:
        return pt.filler
    return None


def aperiodic_element(fg: FastGrowth, target: int) -> OdometerElement:
    """Coherent digits keeping ``target`` out of every Per_{p_i}, smallest digit first.

    Each residue class mod p_i meets a position above level i+1 inside
    [0, p_{i+1}) because every ratio is at least 3, so the search never stalls.
    """
    digits = []
    prev = 0
    for i in range(1, fg.depth + 1):
        step = fg.p[i - 1]
        for d in range(prev, fg.p[i], step):
            if not fg.in_per(target + d, i):
                break
        else:
            raise RuntimeError(f"no aperiodic digit at level {i} for target {target}")
        digits.append(d)
        prev = d
    return OdometerElement(tuple(digits), frozenset({target}))


def factor_digits(values: Sequence, window: Window, fg: FastGrowth, depth: int,
                  labels=None) -> tuple:
    """Recover the odometer digits n_1..n_depth of a window of a point.

    ``values[k]`` is the symbol at ``window.lo + k``. Without ``labels`` the
    symbol of level i is the integer i; otherwise ``labels[i-1]``.
    """
    if len(values) != len(window):
        raise ValueError("values do not cover the window")
    if not 1 <= depth <= fg.depth:
        raise DepthExceeded(f"depth {depth} outside 1..{fg.depth}")

    def sym(lv):
        return lv if labels is None else labels[lv - 1]

    digits = []
    for i in range(1, depth + 1):
        matches = []
        for r in range(fg.p[i]):
            ok = True
            for k, n in enumerate(window):
                lv = fg.level(n + r)
                if lv is not None and lv <= i and values[k] != sym(lv):
                    ok = False
                    break
            if ok:
                matches.append(r)
        if not matches:
            raise NoMatch(i)
        if len(matches) > 1:
            raise Ambiguous(i, matches)
        d = matches[0]
        if digits and d % fg.p[i - 1] != digits[-1]:
            raise NoMatch(i)
        digits.append(d)
    return tuple(digits)
