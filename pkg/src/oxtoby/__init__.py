"""Oxtoby/Toeplitz sequences, their periodic structure, and topological type."""

from . import core, ttype
from .core import FastGrowth, Window, mk_fast_growth, oxtoby_window

__version__ = "0.1.0"
__all__ = ["FastGrowth", "Window", "core", "mk_fast_growth", "oxtoby_window", "ttype"]
