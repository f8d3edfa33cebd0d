"""Period structures and the level structure of the Oxtoby sequence.

The Oxtoby sequence z((p_i),(x_i)) is stored implicitly: position ``n`` carries
symbol ``x_level(n)`` where ``level(n)`` is the construction step that filled
it. Everything in this module depends only on the ratios, never on symbols.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Optional, Sequence

from ..errors import DepthExceeded, RatioTooSmall

Level = Optional[int]  # None: filled at a step beyond the available depth


@dataclass(frozen=True)
class FastGrowth:
    """A fast growing sequence p_0 = 1 | p_1 | ... | p_L given by its ratios."""

    ratios: tuple

    def __post_init__(self):
        ratios = tuple(self.ratios)
        if not ratios:
            raise ValueError("at least one ratio is required")
        for idx, r in enumerate(ratios, 1):
            if isinstance(r, bool) or not isinstance(r, int):
                raise TypeError(f"ratio r_{idx} must be an integer, got {r!r}")
            if r < 3:
                raise RatioTooSmall(idx, r)
        object.__setattr__(self, "ratios", ratios)

    @classmethod
    def uniform(cls, ratio: int, depth: int) -> "FastGrowth":
        return cls((ratio,) * depth)

    @property
    def depth(self) -> int:
        return len(self.ratios)

    @cached_property
    def p(self) -> tuple:
        out = [1]
        for r in self.ratios:
            out.append(out[-1] * r)
        return tuple(out)

    @cached_property
    def q(self) -> tuple:
        out = [0]
        for pi in self.p[1:]:
            out.append(out[-1] + pi)
        return tuple(out)

    def level(self, n: int) -> Level:
        """Step at which position ``n`` is filled, or None if beyond depth L.

        Least i with floor(n / p_{i-1}) congruent to 0 or -1 mod r_i.
        """
        b = n
        for i, r in enumerate(self.ratios, 1):
            d = b % r
            if d == 0 or d == r - 1:
                return i
            b //= r
        return None

    def in_per(self, n: int, i: int) -> bool:
        """Membership of ``n`` in Per_{p_i}(z)."""
        lv = self.level(n)
        return lv is not None and lv <= i

    def truncated(self, depth: int) -> "FastGrowth":
        return replace(self, ratios=self.ratios[:depth])


def mk_fast_growth(ratios: Sequence[int]) -> FastGrowth:
    return FastGrowth(tuple(ratios))


def level(n: int, fg: FastGrowth) -> Level:
    return fg.level(n)


@dataclass(frozen=True)
class Window:
    """Half-open interval [lo, hi) of positions."""

    lo: int
    hi: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty window [{self.lo}, {self.hi})")

    @classmethod
    def centered(cls, radius: int) -> "Window":
        return cls(-radius, radius)

    def __len__(self):
        return self.hi - self.lo

    def __iter__(self):
        return iter(range(self.lo, self.hi))

    def __contains__(self, n):
        return self.lo <= n < self.hi

    def contains_interval(self, a: int, b: int) -> bool:
        """Whether [a, b) lies inside the window."""
        return self.lo <= a and b <= self.hi


@dataclass(frozen=True)
class LeveledWindow:
    window: Window
    levels: tuple

    @property
    def symbols(self) -> tuple:
        # symbol x_i is identified with its index i
        return self.levels

    def at(self, n: int) -> Level:
        return self.levels[n - self.window.lo]

    def render(self, labels=None, unknown="?") -> list:
        """Symbol labels per position; ``labels`` maps a level to its symbol."""
        out = []
        for lv in self.levels:
            if lv is None:
                out.append(unknown)
            elif labels is None:
                out.append(f"x{lv}")
            else:
                out.append(labels[lv - 1])
        return out


def oxtoby_window(fg: FastGrowth, window: Window) -> LeveledWindow:
    return LeveledWindow(window, tuple(fg.level(n) for n in window))


def _check_level_index(fg: FastGrowth, i: int):
    if i < 1:
        raise ValueError(f"level index must be >= 1, got {i}")
    if i > fg.depth:
        raise DepthExceeded(f"level {i} beyond depth {fg.depth}")


def per_set(fg: FastGrowth, i: int, window: Window) -> frozenset:
    """Per_{p_i}(z) intersected with the window (exact, not approximated)."""
    _check_level_index(fg, i)
    return frozenset(n for n in window if fg.in_per(n, i))
