"""Direct step-by-step construction of the Oxtoby sequence on a window.

This is the reference the closed-form ``FastGrowth.level`` is checked
against, so it deliberately shares no code with it: it only ever works with
the blocks [k p_i, (k+1) p_i) and their unfilled sets J(i, k).
"""

from __future__ import annotations


def simulate_fill(ratios, lo: int, hi: int) -> list:
    """Fill step per position of [lo, hi); None for positions left after the last step."""
    filled = [None] * (hi - lo)

    p1 = ratios[0]
    for n in range(lo, hi):
        if n % p1 == 0 or n % p1 == p1 - 1:
            filled[n - lo] = 1

    period = p1
    for step, r in enumerate(ratios[1:], 2):
        # blocks of length p_{step-1} meeting the window
        k = lo // period
        while k * period < hi:
            if k % r == 0 or (k + 1) % r == 0:
                a = max(k * period, lo)
                b = min((k + 1) * period, hi)
                for n in range(a, b):
                    if filled[n - lo] is None:
                        filled[n - lo] = step
            k += 1
        period *= r
    return filled
