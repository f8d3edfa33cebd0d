"""Oxtoby sequences on finite windows of the integers."""

from .fill import simulate_fill
from .growth import (FastGrowth, Level, LeveledWindow, Window, level, mk_fast_growth,
                     oxtoby_window, per_set)
from .points import (NonToeplitz, OdometerElement, SystemPoint, Toeplitz, aperiodic_element,
                     eval_point, factor_digits, point_digits, point_level, point_per_set)
from .structure import (Block, Piece, aligned_intervals, classify_piece, content_class,
                        maximal_blocks, piece_level, reverse_window)

__all__ = [
    "Block", "FastGrowth", "Level", "LeveledWindow", "NonToeplitz", "OdometerElement",
    "Piece", "SystemPoint", "Toeplitz", "Window", "aligned_intervals", "aperiodic_element",
    "classify_piece", "content_class", "eval_point", "factor_digits", "level",
    "maximal_blocks", "mk_fast_growth", "oxtoby_window", "per_set", "piece_level",
    "point_digits", "point_level", "point_per_set", "reverse_window", "simulate_fill",
]
