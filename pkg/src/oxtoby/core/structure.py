"""Maximal periodic blocks, p_j-p_i-pieces and reversal."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ..errors import DepthExceeded, Misaligned
from .growth import FastGrowth, Window
from .points import OdometerElement, point_level


@dataclass(frozen=True)
class Block:
    """Closed interval [n0, n1] maximal inside Per_{p_m}(z)."""

    n0: int
    n1: int
    m: int
    content_class: Optional[int]  # i with z[n0, n1] = z[-q_i - 1, q_i], None if no such i < m

    def __len__(self):
        return self.n1 - self.n0 + 1

    def anchored(self, fg: FastGrowth) -> bool:
        """Whether the block contains a multiple of p_m."""
        pm = fg.p[self.m]
        return -(-self.n0 // pm) * pm <= self.n1


@dataclass(frozen=True)
class Piece:
    lo: int
    hi: int
    i: int
    j: int


def content_class(fg: FastGrowth, n0: int, n1: int, m: int) -> Optional[int]:
    size = n1 - n0 + 1
    for i in range(m):
        qi = fg.q[i]
        if size != 2 * qi + 2:
            continue
        if all(fg.level(n0 + k) == fg.level(-qi - 1 + k) for k in range(size)):
            return i
    return None


def maximal_blocks(fg: FastGrowth, m: int, window: Window) -> list:
    """Maximal p_m-periodic blocks of z lying entirely inside the window.

    Membership is global, so one position of slack on each side decides
    maximality; blocks running past the window edge are dropped.
    """
    if not 1 <= m <= fg.depth:
        raise DepthExceeded(f"level {m} outside 1..{fg.depth}")
    inside = [fg.in_per(n, m) for n in range(window.lo - 1, window.hi + 1)]
    blocks = []
    start = None
    for k in range(1, len(inside) - 1):
        if inside[k] and not inside[k - 1]:
            start = k
        if inside[k] and not inside[k + 1] and start is not None:
            n0 = window.lo - 1 + start
            n1 = window.lo - 1 + k
            blocks.append(Block(n0, n1, m, content_class(fg, n0, n1, m)))
            start = None
    return blocks


def piece_level(fg: FastGrowth, element: OdometerElement, i: int, lo: int):
    """Shared level of the non-Per_{p_i} positions of [lo, lo + p_i).

    Returns the level j, the string "unknown" when every such position lies
    beyond the available digits, or None when the levels disagree.
    """
    shift = element.digits[i - 1]
    known = set()
    unknown = 0
    for n in range(lo, lo + fg.p[i]):
        if fg.in_per(n + shift, i):
            continue
        lv = point_level(fg, element, n)
        if lv is None:
            unknown += 1
        else:
            known.add(lv)
    if unknown and not known:
        return "unknown"
    if unknown or len(known) != 1:
        return None
    return known.pop()


def classify_piece(fg: FastGrowth, element: OdometerElement, i: int,
                   interval: Window) -> Optional[Piece]:
    """The unique j making ``interval`` a p_j-p_i-piece, or None if it is no piece."""
    if not 1 <= i <= element.depth:
        raise DepthExceeded(f"level {i} outside 1..{element.depth}")
    pi = fg.p[i]
    if len(interval) != pi or (interval.lo + element.digits[i - 1]) % pi:
        raise Misaligned(f"[{interval.lo}, {interval.hi}) is not on the p_{i} grid "
                         f"shifted by -{element.digits[i - 1]}")
    j = piece_level(fg, element, i, interval.lo)
    if j == "unknown":
        raise DepthExceeded(f"levels on [{interval.lo}, {interval.hi}) exceed depth "
                            f"{element.depth}")
    if j is None or j <= i:
        return None
    return Piece(interval.lo, interval.hi, i, j)


def aligned_intervals(fg: FastGrowth, element: OdometerElement, i: int, window: Window):
    """Start points of the intervals [k p_i - n_i, (k+1) p_i - n_i) inside the window."""
    pi = fg.p[i]
    shift = element.digits[i - 1]
    k = -(-(window.lo + shift) // pi)
    while (k + 1) * pi - shift <= window.hi:
        yield k * pi - shift
        k += 1


def reverse_window(window: Window, values: Sequence):
    """Values of x^{-1} on (-hi, -lo] given x on [lo, hi); x^{-1}(n) = x(-n)."""
    if len(values) != len(window):
        raise ValueError("values do not cover the window")
    return Window(-window.hi + 1, -window.lo + 1), tuple(reversed(values))
