"""Deliberately corrupted engines for fault-injection runs.

Each mutation is a ``FastGrowth`` subclass overriding one piece of the level
arithmetic; all core operations and lemma checks go through that engine, so a
sound harness must flag every one of them somewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..core.growth import FastGrowth
from ..errors import ConfigError


@dataclass(frozen=True)
class DropMinusOne(FastGrowth):
    """Fill rule keeps only k = 0 mod r, forgetting k = -1."""

    def level(self, n):
        b = n
        for i, r in enumerate(self.ratios, 1):
            if b % r == 0:
                return i
            b //= r
        return None


@dataclass(frozen=True)
class TruncatingDivision(FastGrowth):
    """Block index rounded toward zero instead of toward minus infinity."""

    def level(self, n):
        b = n
        for i, r in enumerate(self.ratios, 1):
            d = b % r
            if d == 0 or d == r - 1:
                return i
            b = int(b / r)
        return None


@dataclass(frozen=True)
class QOffByOne(FastGrowth):
    """Cumulative sums q_i start counting from p_0."""

    @property
    def q(self):
        out = [0]
        for pi in self.p[1:]:
            out.append(out[-1] + pi)
        return (0,) + tuple(v + 1 for v in out[1:])


@dataclass(frozen=True)
class QShiftedIndex(FastGrowth):
    """q_i read one index too far: q_i takes the value of q_{i+1}."""

    @property
    def q(self):
        out = [0]
        for pi in self.p[1:]:
            out.append(out[-1] + pi)
        return tuple(out[1:]) + (out[-1] + self.p[-1] * 3,)


@dataclass(frozen=True)
class PinnedLevel(FastGrowth):
    """One position reports a fixed level regardless of the construction."""

    position: int = 4
    value: Optional[int] = 2

    def level(self, n):
        if n == self.position:
            return self.value
        return super().level(n)


@dataclass(frozen=True)
class ShiftedRatios(FastGrowth):
    """Step i reads the ratio of step i + 1 (cyclically)."""

    def level(self, n):
        rs = self.ratios[1:] + self.ratios[:1]
        b = n
        for i, r in enumerate(rs, 1):
            d = b % r
            if d == 0 or d == r - 1:
                return i
            b //= r
        return None


@dataclass(frozen=True)
class DropTopLevel(FastGrowth):
    """The last construction step is never performed."""

    def level(self, n):
        lv = super().level(n)
        return None if lv == self.depth else lv


@dataclass(frozen=True)
class SkipLevel(FastGrowth):
    """Levels from 2 on are reported one step too high."""

    def level(self, n):
        lv = super().level(n)
        if lv is None or lv < 2:
            return lv
        return lv + 1 if lv < self.depth else None


MUTATIONS = {
    "drop-minus-one": (DropMinusOne, "fill rule ignores the -1 residue"),
    "truncating-division": (TruncatingDivision, "block index rounds toward zero"),
    "q-off-by-one": (QOffByOne, "q_i = p_1 + ... + p_i + 1"),
    "q-shifted-index": (QShiftedIndex, "q_i replaced by q_{i+1}"),
    "pin-level-4": (PinnedLevel, "level(4) forced to 2"),
    "pin-level-7-overflow": (lambda r: PinnedLevel(r, 7, None), "level(7) forced past the depth"),
    "shifted-ratios": (ShiftedRatios, "step i uses ratio r_{i+1}"),
    "drop-top-level": (DropTopLevel, "last fill step skipped"),
    "skip-level": (SkipLevel, "levels >= 2 reported one too high"),
}


def mutated(name: str, ratios) -> FastGrowth:
    try:
        factory, _ = MUTATIONS[name]
    except KeyError:
        raise ConfigError(f"unknown mutation {name!r}; known: {', '.join(MUTATIONS)}") from None
    return factory(tuple(ratios))
