"""Brute-force topological type comparison for eventually periodic sequences.

Independent of ``ttype.same_topological_type``: it never lifts to a joint
period or inspects fibers. It enumerates a fixed family of index subsequences
and records along which ones a sequence is eventually constant. Two sequences
are judged equivalent iff their records coincide.

The family is every arithmetic progression a + k d (0 <= a, d <= modulus)
together with every union of two residue classes mod ``modulus``. Unions are
needed: for the periods (a, a, b) and (c, d, d) no progression tells the two
apart, yet alternating between the classes 0 and 1 mod 3 keeps the first
constant while the second flips. Conversely, any subsequence that separates
two sequences visits two residue classes (mod a common period) infinitely
often on which one sequence agrees and the other does not, so the two-class
unions already catch every difference.
"""

from __future__ import annotations

from itertools import combinations
from math import lcm


def _eventually_constant(seq, indices) -> bool:
    return len({seq.value(n) for n in indices}) == 1


def families(modulus: int, start: int):
    """(name, indices) pairs; the indices cover one cycle past ``start``."""
    out = []
    span = range(start, start + modulus)
    for d in range(1, modulus + 1):
        for a in range(modulus):
            k0 = max(0, -(-(start - a) // d))
            out.append((("ap", a, d), [a + (k0 + k) * d for k in range(modulus)]))
    for size in (1, 2):
        for rs in combinations(range(modulus), size):
            out.append((("classes",) + rs, [n for n in span if n % modulus in rs]))
    return out


def signature(seq, modulus: int, start: int, fams=None) -> int:
    """Bitmask: bit k set iff ``seq`` is eventually constant along family k.

    ``modulus`` must be a multiple of the period and ``start`` at least the
    prefix length, so that one cycle decides eventual behaviour.
    """
    if modulus % seq.period or start < len(seq.prefix):
        raise ValueError("modulus/start do not cover the sequence's periodic part")
    fams = families(modulus, start) if fams is None else fams
    mask = 0
    for k, (_, idx) in enumerate(fams):
        if _eventually_constant(seq, idx):
            mask |= 1 << k
    return mask


def brute_same_type(s1, s2, modulus: int | None = None, start: int | None = None) -> bool:
    modulus = lcm(s1.period, s2.period) if modulus is None else modulus
    start = max(len(s1.prefix), len(s2.prefix)) if start is None else start
    fams = families(modulus, start)
    return signature(s1, modulus, start, fams) == signature(s2, modulus, start, fams)


def progression_only_same_type(s1, s2, modulus: int, start: int) -> bool:
    """The weaker comparison using arithmetic progressions alone (kept for contrast)."""
    fams = [f for f in families(modulus, start) if f[0][0] == "ap"]
    return signature(s1, modulus, start, fams) == signature(s2, modulus, start, fams)
