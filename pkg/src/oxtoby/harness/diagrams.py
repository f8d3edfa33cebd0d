"""Aligned-text pictures of windows, blocks and pieces."""

from __future__ import annotations

from ..core.growth import FastGrowth, LeveledWindow, Window
from ..core.points import OdometerElement, point_level
from ..core.structure import aligned_intervals, classify_piece, maximal_blocks
from ..errors import DepthExceeded


def render_window(lw: LeveledWindow, labels=None) -> str:
    """One row of cells, and a second row marking position 0 when it is visible."""
    cells = lw.render(labels)
    width = max(len(c) for c in cells)
    row = " ".join(c.ljust(width) for c in cells)
    if 0 not in lw.window:
        return row
    col = (width + 1) * (0 - lw.window.lo)
    return row + "\n" + " " * col + "0"


def _level_row(window: Window, level) -> str:
    out = []
    for n in window:
        lv = level(n)
        out.append("?" if lv is None else (str(lv) if lv < 10 else "+"))
    return "".join(out)


def render_blocks(fg: FastGrowth, m: int, window: Window) -> str:
    """Level digits, then each maximal p_m-block drawn as [===]."""
    row = [" "] * len(window)
    for b in maximal_blocks(fg, m, window):
        a, z = b.n0 - window.lo, b.n1 - window.lo
        for k in range(a, z + 1):
            row[k] = "="
        row[a] = "["
        row[z] = "]" if z > a else "|"
    return _level_row(window, fg.level) + "\n" + "".join(row).rstrip()


def render_pieces(fg: FastGrowth, element: OdometerElement, i: int, window: Window) -> str:
    """Level digits, then each aligned p_i-interval labelled by its piece level j."""
    row = [" "] * len(window)
    for lo in aligned_intervals(fg, element, i, window):
        try:
            piece = classify_piece(fg, element, i, Window(lo, lo + fg.p[i]))
            mark = "?" if piece is None else (str(piece.j) if piece.j < 10 else "+")
        except DepthExceeded:
            mark = "?"
        a = lo - window.lo
        for k in range(a, a + fg.p[i]):
            row[k] = mark
        row[a] = "["
    levels = _level_row(window, lambda n: point_level(fg, element, n))
    return levels + "\n" + "".join(row).rstrip()
