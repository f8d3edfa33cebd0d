"""Topological type of sequences over finite spaces, and the reduction maps.

Two sequences have the same topological type when exactly the same index
subsequences converge. In a finite space convergence means eventual
constancy, so for eventually periodic sequences the relation is decided by
comparing residue classes past both prefixes: every infinite fiber
{n : s1(n) = a} must be almost contained in a single fiber of s2 and vice
versa.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Hashable, Sequence, Union

from .core.growth import FastGrowth, Window, oxtoby_window
from .errors import LengthMismatch, TooFewSymbols


@dataclass(frozen=True)
class FiniteMetricSpace:
    points: tuple
    dist: tuple

    def __post_init__(self):
        pts = tuple(self.points)
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.dist)
        n = len(pts)
        if len(set(pts)) != n:
            raise ValueError("duplicate point labels")
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ValueError("distance matrix shape does not match the points")
        for a in range(n):
            if rows[a][a] != 0:
                raise ValueError(f"d({pts[a]!r}, {pts[a]!r}) != 0")
            for b in range(n):
                if a != b and (rows[a][b] <= 0 or rows[a][b] != rows[b][a]):
                    raise ValueError(f"d({pts[a]!r}, {pts[b]!r}) is not symmetric positive")
                for c in range(n):
                    if rows[a][c] > rows[a][b] + rows[b][c]:
                        raise ValueError("triangle inequality fails")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "dist", rows)

    @classmethod
    def discrete(cls, points) -> "FiniteMetricSpace":
        pts = tuple(points)
        return cls(pts, [[0 if a == b else 1 for b in pts] for a in pts])

    def d(self, a, b) -> Fraction:
        return self.dist[self.points.index(a)][self.points.index(b)]

    def __contains__(self, a):
        return a in self.points


@dataclass(frozen=True)
class EventuallyPeriodicSeq:
    """prefix followed by tail repeated forever."""

    prefix: tuple
    tail: tuple

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "tail", tuple(self.tail))
        if not self.tail:
            raise ValueError("period must be at least 1")

    @classmethod
    def parse(cls, text: str) -> "EventuallyPeriodicSeq":
        """``"c c | a b"`` is c, c, then a, b repeating; no bar means purely periodic."""
        if "|" in text:
            head, _, rest = text.partition("|")
        else:
            head, rest = "", text
        return cls(tuple(head.split()), tuple(rest.split()))

    @property
    def period(self) -> int:
        return len(self.tail)

    def value(self, n: int):
        if n < 0:
            raise IndexError(n)
        if n < len(self.prefix):
            return self.prefix[n]
        return self.tail[(n - len(self.prefix)) % len(self.tail)]

    __getitem__ = value

    def segment(self, lo: int, hi: int) -> list:
        """Values at lo, ..., hi - 1."""
        if lo < 0 or hi < lo:
            raise IndexError((lo, hi))
        head = list(self.prefix[lo:hi])
        lo = max(lo, len(self.prefix))
        if hi <= lo:
            return head
        off = (lo - len(self.prefix)) % len(self.tail)
        need = hi - lo
        reps = -(-(need + off) // len(self.tail))
        return head + list((self.tail * reps)[off:off + need])

    def symbols(self) -> set:
        return set(self.prefix) | set(self.tail)

    def __str__(self):
        return " ".join(map(str, self.prefix)) + " | " + " ".join(map(str, self.tail))


@dataclass(frozen=True)
class Subsequence:
    """Indices n >= start with n mod modulus in residues.

    A single residue is the arithmetic progression start + k * modulus.
    """

    start: int
    modulus: int
    residues: tuple

    @classmethod
    def progression(cls, start: int, step: int) -> "Subsequence":
        return cls(start, step, (start % step,))

    @property
    def is_progression(self) -> bool:
        return len(self.residues) == 1

    def indices(self, lo: int, hi: int):
        lo = max(lo, self.start)
        return [n for n in range(lo, hi) if n % self.modulus in self.residues]


@dataclass(frozen=True)
class Same:
    pairs: tuple   # (a, b): past ``bound``, s1(n) = a exactly when s2(n) = b
    bound: int


@dataclass(frozen=True)
class Different:
    subseq: Subsequence
    constant: int  # which input (1 or 2) is eventually constant along subseq


TypeWitness = Union[Same, Different]


def omega_limit(s: EventuallyPeriodicSeq) -> set:
    return set(s.tail)


def _joint_range(s1, s2):
    start = max(len(s1.prefix), len(s2.prefix))
    return start, lcm(s1.period, s2.period)


@lru_cache(maxsize=None)
def _divisors(n):
    return tuple(d for d in range(1, n + 1) if n % d == 0)


def same_topological_type(s1: EventuallyPeriodicSeq, s2: EventuallyPeriodicSeq) -> TypeWitness:
    start, period = _joint_range(s1, s2)
    v1 = s1.segment(start, start + period)
    v2 = s2.segment(start, start + period)
    pairs = set(zip(v1, v2))
    # the residue pairs form a bijection exactly when fibers match up one to one
    if len(pairs) == len(set(v1)) == len(set(v2)):
        return Same(tuple(sorted(pairs, key=repr)), start)

    # a progression covers a coset of d Z in Z / period for some d | period;
    # offset k in the span holds index start + k
    for d in _divisors(period):
        for k in range(d):
            const1 = len(set(v1[k::d])) == 1
            const2 = len(set(v2[k::d])) == 1
            if const1 != const2:
                return Different(Subsequence.progression(start + k, d), 1 if const1 else 2)

    # no progression separates them: merge two residue classes instead
    for first, second, own in ((v1, v2, 1), (v2, v1, 2)):
        seen = {}
        for k, key in enumerate(first):
            if key in seen and second[seen[key]] != second[k]:
                res = ((start + seen[key]) % period, (start + k) % period)
                return Different(Subsequence(start, period, res), own)
            seen.setdefault(key, k)
    raise AssertionError("unreachable: fibers disagree but no witness found")


def check_witness(s1: EventuallyPeriodicSeq, s2: EventuallyPeriodicSeq, w: TypeWitness) -> bool:
    """Replay a witness over one full joint period past its starting point."""
    start, period = _joint_range(s1, s2)
    if isinstance(w, Same):
        if len({a for a, _ in w.pairs}) != len(w.pairs) or len({b for _, b in w.pairs}) != len(w.pairs):
            return False
        allowed = set(w.pairs)
        lo = w.bound
        return all((s1.value(n), s2.value(n)) in allowed
                   for n in range(lo, max(lo, start) + period))
    sub = w.subseq
    lo = max(start, sub.start)
    ns = sub.indices(lo, lo + lcm(period, sub.modulus))
    if not ns:
        return False
    v1 = {s1.value(n) for n in ns}
    v2 = {s2.value(n) for n in ns}
    if w.constant == 1:
        return len(v1) == 1 and len(v2) >= 2
    return len(v2) == 1 and len(v1) >= 2


def interleave_pointed(orbit: Sequence) -> list:
    """(x, f(x), x, f^2(x), ..., x, f^K(x)) from the orbit segment x, f(x), ..., f^K(x)."""
    if len(orbit) < 2:
        raise ValueError("need x and at least one iterate")
    x = orbit[0]
    out = []
    for fx in orbit[1:]:
        out.extend((x, fx))
    return out


def interleave_dense(x: Sequence, q: Sequence) -> list:
    if len(x) != len(q):
        raise LengthMismatch(f"lengths {len(x)} and {len(q)} differ")
    out = []
    for a, b in zip(x, q):
        out.extend((a, b))
    return out


def theta(x: Sequence) -> list:
    """Triangular enumeration tagged with heights 1/1, 1/2, 1/3, ...

    Block n+1 lists x_1..x_{n+1}; the running index continues across blocks.
    """
    if not x:
        raise ValueError("theta needs a nonempty sequence")
    out = []
    for n in range(len(x)):
        base = n * (n + 1) // 2
        for k in range(n + 1):
            out.append((x[k], Fraction(1, base + k + 1)))
    return out


@dataclass(frozen=True)
class OxtobySpec:
    """The Oxtoby sequence built from a fast growing sequence and symbols x_1, x_2, ..."""

    fg: FastGrowth
    symbols: tuple

    def window(self, window: Window) -> list:
        """Symbols on the window; None where the level exceeds the depth."""
        lw = oxtoby_window(self.fg, window)
        return [None if lv is None else self.symbols[lv - 1] for lv in lw.levels]

    @property
    def depth(self) -> int:
        return self.fg.depth


def oxtoby_spec_from_sequence(symbols: Sequence[Hashable], fg: FastGrowth,
                              depth: int | None = None) -> OxtobySpec:
    if depth is not None:
        if not 1 <= depth <= fg.depth:
            raise ValueError(f"depth {depth} outside 1..{fg.depth}")
        fg = fg.truncated(depth)
    symbols = tuple(symbols)
    if len(symbols) < fg.depth:
        raise TooFewSymbols(f"{len(symbols)} symbols for depth {fg.depth}")
    return OxtobySpec(fg, symbols)
